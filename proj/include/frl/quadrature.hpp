#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature with an explicit panel
// budget. Panels come from Boost's G7-K15 rule; refinement always bisects the
// panel with the largest error estimate.

#include <cstddef>
#include <functional>
#include <span>

namespace frl::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_panels = 1'000'000;
};

/// Integral of f over [a, b]. Throws ConvergenceError when the panel budget
/// runs out before the tolerance is met.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

/// Same, starting from the panels delimited by `breaks` (sorted, at least 2).
Result integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                 const Options& opt = {});

}  // namespace frl::quad
