#pragma once

// Mellin-Barnes machinery: complex Gamma, Fox H-function contour quadrature,
// the chirp integrals I1/I2 and the chirp Fourier transform.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frl/error.hpp"
#include "frl/theory.hpp"

namespace frl::mellin {

using cplx = std::complex<double>;

/// ln Gamma(s) up to a multiple of 2 pi i (exp of it is exact). PoleError on
/// the non-positive real integers.
cplx log_gamma(cplx s);
cplx gamma(cplx s);

/// One Gamma factor parameter pair: (a_l, A_l) or (b_j, B_j), A, B > 0.
struct GammaParam {
  cplx c;
  double C;
};

/// H^{m,n}_{p,q}(z) = prefactor (1/2 pi i) int_L Hs(s) z^{-s} ds with
/// Hs(s) = prod_{j<=m} G(b_j + B_j s) prod_{l<=n} G(1 - a_l - A_l s)
///       / (prod_{l>n} G(a_l + A_l s) prod_{j>m} G(1 - b_j - B_j s)).
struct HFunctionSpec {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<GammaParam> upper;  // a_l, A_l; size p
  std::vector<GammaParam> lower;  // b_j, B_j; size q
  cplx prefactor = 1.0;
  double sigma = 0.0;
};

/// Throws PreconditionError unless orders, list sizes and positivity hold and
/// sigma strictly separates the left family poles from the right family.
void validate(const HFunctionSpec& spec);

/// sum B_j - sum A_l
double mu(const HFunctionSpec& spec);

/// Distance from sigma to the nearest pole of either family.
double pole_clearance(const HFunctionSpec& spec);

/// log Hs(s) (mod 2 pi i), excluding the prefactor.
cplx log_integrand(const HFunctionSpec& spec, cplx s);

struct MbOptions {
  double t_max = 400.0;
  double step = 0.05;            // upper bound; tightened to clearance / 6
  double decay_tol = 1e-14;      // |integrand| at the ends, relative to the peak
  int max_extensions = 3;        // doublings of t_max allowed to reach decay_tol
};

struct MbReport {
  cplx value;
  double coarse_delta = 0.0;  // |value - value on every second node|
  double step = 0.0;
  double t_max = 0.0;
  double lambda = 0.0;  // contour bend
  std::size_t nodes = 0;
  double end_magnitude = 0.0;
  double peak_magnitude = 0.0;
};

/// Trapezoidal quadrature along s(t) = sigma + d lambda (sqrt(1+t^2) - 1) + i t,
/// t in [-t_max, t_max], d = -sign(mu). The bend keeps poles on the same side
/// (they lie on the real axis) and turns the algebraic decay of Hs on the
/// vertical line into exponential decay.
MbReport mb_integrate(const HFunctionSpec& spec, double z, const MbOptions& opt = {});

/// rho = max_{l<=n} (Re a_l - 1) / A_l; requires mu <= 0 and no coinciding
/// poles within the l <= n family.
double h_asymptotic_exponent(const HFunctionSpec& spec);

using theory::ChirpIntegral;

struct ChirpIntegralSpec {
  double alpha;
  double beta;
  ChirpIntegral which;
};

/// I1(k) = int_0^inf y^{a-1} sin((k/y)^b) sin(y) dy,
/// I2(k) = int_0^inf y^{a-b-1} cos((k/y)^b) sin(y) dy, as H-functions in the
/// variable u with z = k^{-1/b}.
HFunctionSpec build_chirp_spec(const ChirpIntegralSpec& c);

struct DirectOptions {
  double tol = 1e-12;
  std::size_t max_lobes = 4000;
  int euler_depth = 30;
  double tail_start_scale = 1.0;  // multiplies the tail start (robustness checks)
  bool zero_integrand = false;    // replaces the chirp factor by 0
};

struct DirectReport {
  double value = 0.0;
  double head = 0.0, middle = 0.0, tail = 0.0;
  std::size_t head_lobes = 0, tail_lobes = 0;
  std::vector<double> tail_lobe_magnitudes;
};

/// Direct quadrature of I1/I2 by alternating lobe sums with Euler acceleration.
DirectReport direct_oscillatory_I(const ChirpIntegralSpec& c, double k, const DirectOptions& opt = {});

enum class Method { MB, Direct };

/// I1/I2 at k via either route. The MB route adds the u = 0 residue that the
/// contour of the I2 spec leaves on its left.
double chirp_integral(const ChirpIntegralSpec& c, double k, Method method,
                      const MbOptions& mb = {}, const DirectOptions& direct = {});

/// Real Fourier transform of the even chirp |t|^a sin(|t|^-b) at nu != 0.
double chirp_ft(double alpha, double beta, double nu, Method method);

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

void to_json(nlohmann::json& j, const HFunctionSpec& s);
void from_json(const nlohmann::json& j, HFunctionSpec& s);
void to_json(nlohmann::json& j, const MbReport& r);

}  // namespace frl::mellin
