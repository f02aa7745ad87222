#pragma once

// Real-argument special functions and difference-calculus primitives.

#include <concepts>

namespace frl::specfun {

/// Distance below which an argument counts as sitting on a Gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

/// sin(pi x) with exact argument reduction; exact zeros at integers.
double sin_pi(double x);

/// Gamma function for real s. Lanczos (g = 607/128, 15 terms) for s >= 0.5,
/// reflection below. Throws PoleError at non-positive integers.
double gamma(double s);

/// ln Gamma(s) for s > 0. Throws DomainError otherwise.
double log_gamma(double s);

/// ln|Gamma(s)| for any non-pole real s; `sign` receives the sign of Gamma(s).
double log_abs_gamma(double s, int& sign);

/// Stirling's approximant sqrt(2 pi t) (t/e)^t of Gamma(t+1).
double stirling(double t);

/// Natural logarithm of stirling(t); finite where stirling(t) overflows.
double log_stirling(double t);

struct FactorialPolyParams {
  double gamma;  // exponent
  double h;      // difference interval, > 0
};

/// Factorial polynomial t^{(gamma)_h} = h^gamma Gamma(t/h+1) / Gamma(t/h-gamma+1),
/// evaluated through log-Gamma differences with sign tracking.
double falling_factorial(double t, FactorialPolyParams p);

/// Forward difference f(t+h) - f(t).
template <typename F>
  requires std::invocable<F&, double>
double forward_difference(F&& f, double t, double h) {
  return static_cast<double>(f(t + h)) - static_cast<double>(f(t));
}

}  // namespace frl::specfun
