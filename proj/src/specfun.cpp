#include "frl/specfun.hpp"

#include <cmath>
#include <numbers>

#include "frl/error.hpp"
#include "lanczos.hpp"

namespace frl::specfun {

namespace {

using lanczos::kG;

bool near_pole(double s) {
  const double r = std::nearbyint(s);
  return r <= 0.0 && std::abs(s - r) < kPoleTolerance;
}

void check_finite(double s, const char* what) {
  if (!std::isfinite(s)) throw DomainError(std::string(what) + ": non-finite argument");
}

// ln Gamma(a) - ln Gamma(b) for a, b >= 0.5, arranged so that the large
// (s - 1/2) ln t terms cancel analytically instead of numerically.
double log_gamma_ratio_lanczos(double a, double b) {
  const double tb = b + kG - 0.5;
  const double d = a - b;
  return (a - 0.5) * std::log1p(d / tb) + d * std::log(tb) - d +
         std::log(lanczos::series(a - 1.0) / lanczos::series(b - 1.0));
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  const double sign = r < 0.0 ? -1.0 : 1.0;
  double a = std::abs(r);
  if (a > 0.5) a = 1.0 - a;
  const double v = a <= 0.25 ? std::sin(std::numbers::pi * a)
                             : std::cos(std::numbers::pi * (0.5 - a));
  return sign * v;
}

double gamma(double s) {
  check_finite(s, "gamma");
  if (near_pole(s)) throw PoleError("gamma: pole at non-positive integer");
  if (s < 0.5) {
    return std::numbers::pi / (sin_pi(s) * gamma(1.0 - s));
  }
  const double t = s + kG - 0.5;
  // Split the power so that t^(s-1/2) does not overflow before e^-t is applied.
  const double half = std::pow(t, 0.5 * (s - 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) *
         lanczos::series(s - 1.0);
}

double log_gamma(double s) {
  check_finite(s, "log_gamma");
  if (s <= 0.0) throw DomainError("log_gamma: argument must be positive");
  if (s < 0.5) return log_gamma(s + 1.0) - std::log(s);
  const double t = s + kG - 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (s - 0.5) * std::log(t) - t +
         std::log(lanczos::series(s - 1.0));
}

double log_abs_gamma(double s, int& sign) {
  check_finite(s, "log_abs_gamma");
  if (near_pole(s)) throw PoleError("log_abs_gamma: pole at non-positive integer");
  if (s >= 0.5) {
    sign = 1;
    return log_gamma(s);
  }
  const double sp = sin_pi(s);
  sign = sp < 0.0 ? -1 : 1;
  return std::log(std::numbers::pi) - std::log(std::abs(sp)) - log_gamma(1.0 - s);
}

double stirling(double t) {
  check_finite(t, "stirling");
  if (t <= 0.0) throw DomainError("stirling: argument must be positive");
  return std::sqrt(2.0 * std::numbers::pi * t) * std::pow(t / std::numbers::e, t);
}

double log_stirling(double t) {
  check_finite(t, "log_stirling");
  if (t <= 0.0) throw DomainError("log_stirling: argument must be positive");
  return 0.5 * std::log(2.0 * std::numbers::pi * t) + t * (std::log(t) - 1.0);
}

double falling_factorial(double t, FactorialPolyParams p) {
  check_finite(t, "falling_factorial");
  check_finite(p.gamma, "falling_factorial");
  if (!(p.h > 0.0) || !std::isfinite(p.h)) {
    throw DomainError("falling_factorial: difference interval h must be positive");
  }
  const double x = t / p.h;
  const double a = x + 1.0;
  const double b = x - p.gamma + 1.0;
  if (near_pole(a) || near_pole(b)) {
    throw PoleError("falling_factorial: Gamma pole in t/h+1 or t/h-gamma+1");
  }
  double log_ratio = 0.0;
  int sign = 1;
  if (a >= 0.5 && b >= 0.5) {
    log_ratio = log_gamma_ratio_lanczos(a, b);
  } else {
    int sa = 1;
    int sb = 1;
    log_ratio = log_abs_gamma(a, sa) - log_abs_gamma(b, sb);
    sign = sa * sb;
  }
  return sign * std::exp(p.gamma * std::log(p.h) + log_ratio);
}

}  // namespace frl::specfun
