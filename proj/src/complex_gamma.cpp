#include <cmath>
#include <numbers>

#include "frl/mellin.hpp"
#include "frl/specfun.hpp"
#include "lanczos.hpp"

namespace frl::mellin {

namespace {

constexpr double kPi = std::numbers::pi;

// ln sin(pi s), stable for large |Im s| where sin itself overflows.
cplx log_sin_pi(cplx s) {
  const cplx i(0.0, 1.0);
  if (s.imag() >= 0.0) {
    // sin(pi s) = e^{-i pi s} (e^{2 i pi s} - 1) / (2i), |e^{2 i pi s}| <= 1
    return -i * kPi * s + std::log((std::exp(2.0 * i * kPi * s) - 1.0) / (2.0 * i));
  }
  return std::conj(log_sin_pi(std::conj(s)));
}

cplx log_gamma_right(cplx s) {
  const cplx t = s + (lanczos::kG - 0.5);
  return 0.5 * std::log(2.0 * kPi) + (s - 0.5) * std::log(t) - t +
         std::log(lanczos::series(s - 1.0));
}

}  // namespace

cplx log_gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("complex log_gamma: non-finite argument");
  }
  if (std::abs(s.imag()) < specfun::kPoleTolerance && s.real() <= 0.5 &&
      std::abs(s.real() - std::round(s.real())) < specfun::kPoleTolerance) {
    throw PoleError("complex log_gamma: pole at non-positive integer");
  }
  if (s.real() >= 0.5) return log_gamma_right(s);
  return std::log(kPi) - log_sin_pi(s) - log_gamma_right(1.0 - s);
}

cplx gamma(cplx s) { return std::exp(log_gamma(s)); }

}  // namespace frl::mellin
