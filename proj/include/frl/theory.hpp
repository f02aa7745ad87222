#pragma once

// Closed-form decay and Hoelder exponent predictions: the finite-oscillation
// theorem, its converse, and the chirp case analysis.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frl/catalog.hpp"
#include "frl/error.hpp"

namespace frl::theory {

enum class Source { Theorem1, ChirpSeries, ChirpTransform, KnownExample };

struct Condition {
  std::string name;
  bool satisfied;
};

struct TheoryPrediction {
  double decay_exponent;                 // rho: coefficients in O(1/|k|^rho)
  std::optional<double> holder_exponent;  // in (0, 1]
  int smoothness_order = 0;
  std::vector<Condition> conditions;
  Source source;
  std::string note;
};

/// Thrown when a chirp's Gamma poles coincide; the decay rate is then undetermined.
class PoleCoincidenceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// rho = 1 + m + mu for AC, C_{m,mu}, finitely oscillating functions.
TheoryPrediction predict_theorem1(int m, double mu);

enum class AcStatus {
  Implied,       // mu > 1/2
  Undecidable,   // mu < 1/2: non-AC functions with this decay exist
  OpenQuestion,  // mu == 1/2
};

struct HolderInference {
  int m;
  double mu;
  bool implies_ac;
  AcStatus ac_status;
};

/// Converse direction: decay O(1/|k|^rho) gives f in C_{m,mu} with m = floor(rho-1).
HolderInference infer_holder_from_decay(double rho);

/// Uniform Hoelder exponent alpha/(1+beta) of |x|^alpha sin(1/|x|^beta).
double chirp_holder(double alpha, double beta);

enum class ChirpIntegral { I1, I2 };

struct Rational {
  std::int64_t num;
  std::int64_t den;  // > 0
};

/// Continued-fraction recovery of p/q with q <= max_den, exact to 1e-12.
std::optional<Rational> as_rational(double x, std::int64_t max_den = 1'000'000);

/// True iff alpha + c == beta + beta d (I1) or alpha + c == 2 beta + beta d (I2)
/// for some c, d in {0..search_bound}. Rational inputs are decided exactly.
bool pole_coincidence(double alpha, double beta, ChirpIntegral which, int search_bound = 10000);
bool pole_coincidence(Rational alpha, Rational beta, ChirpIntegral which,
                      int search_bound = 10000);

enum class DecayMode { Series, Transform };

TheoryPrediction predict_chirp_decay(double alpha, double beta, DecayMode mode);

TheoryPrediction predict_catalog(const catalog::FunctionDescriptor& d);

std::string_view source_name(Source s);
std::string_view ac_status_name(AcStatus s);

void to_json(nlohmann::json& j, const TheoryPrediction& p);
void to_json(nlohmann::json& j, const HolderInference& h);

}  // namespace frl::theory
