#pragma once

// Test-function zoo with exact evaluators and ground-truth regularity metadata.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace frl::catalog {

struct Chirp {
  double alpha;
  double beta;
};
struct PowerAbs {
  double mu;
};
struct Weierstrass {
  int b = 3;
  double mu;
};
struct CantorLebesgue {
  int depth = 40;
};
struct ExpAbs {
  double a;
};
/// e^{-pi t^2} |t|^mu (decaying Gaussian; see README for the sign convention).
struct GaussPower {
  double mu;
};

using Params = std::variant<Chirp, PowerAbs, Weierstrass, CantorLebesgue, ExpAbs, GaussPower>;

enum class Kind { Chirp, PowerAbs, Weierstrass, CantorLebesgue, ExpAbs, GaussPower };

/// A named analytic test function on [-L, L], extended 2L-periodically.
struct FunctionDescriptor {
  Params params;
  double half_width = 1.0;

  Kind kind() const noexcept { return static_cast<Kind>(params.index()); }
};

FunctionDescriptor chirp(double alpha, double beta, double L = 1.0);
FunctionDescriptor power_abs(double mu, double L = 1.0);
FunctionDescriptor weierstrass(double mu, int b = 3, double L = 1.0);
FunctionDescriptor cantor_lebesgue(int depth = 40, double L = 1.0);
FunctionDescriptor exp_abs(double a, double L = 1.0);
FunctionDescriptor gauss_power(double mu, double L = 1.0);

/// Throws DomainError when a parameter invariant is violated.
void validate(const FunctionDescriptor& d);

std::string_view kind_name(Kind k);
Kind kind_from_name(std::string_view name);
std::string describe(const FunctionDescriptor& d);

/// Exact function value; throws DomainError for |x| > L.
double evaluate(const FunctionDescriptor& d, double x);

/// Points where the function fails to be smooth (all catalog kinds: {0}).
std::vector<double> singular_points(const FunctionDescriptor& d);

struct RegularityMetadata {
  double holder_exponent_bound;                   // in (0, 1]
  std::optional<double> decay_exponent_predicted;  // rho in O(1/|k|^rho)
  bool is_ac;
  bool is_bv;
  bool finite_oscillations;
  std::string decay_note;  // e.g. "along k = b^j"
};

RegularityMetadata metadata(const FunctionDescriptor& d);

/// Closed-form Fourier transform on R where one is known (ExpAbs only).
std::optional<double> closed_form_ft(const FunctionDescriptor& d, double nu);

/// A real function on [-L, L] with its non-smooth points; the estimators
/// accept any function in this form, catalog descriptors included.
struct AnalyticFunction {
  std::function<double(double)> eval;
  double half_width = 1.0;
  std::vector<double> singular_points;
  std::string label;
};

AnalyticFunction as_function(const FunctionDescriptor& d);

void to_json(nlohmann::json& j, const FunctionDescriptor& d);
void from_json(const nlohmann::json& j, FunctionDescriptor& d);
void to_json(nlohmann::json& j, const RegularityMetadata& m);

}  // namespace frl::catalog
