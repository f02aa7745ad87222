#include "frl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "frl/error.hpp"

namespace frl::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel panel(const std::function<double(double)>& f, double a, double b) {
  // Boost reports the error relative to the L1 norm of f on the panel.
  double err = 0.0, l1 = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {a, b, v, err * l1};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, std::span<const double> breaks,
                 const Options& opt) {
  if (breaks.size() < 2) throw DomainError("quad::integrate: need at least two breakpoints");
  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) continue;
    Panel p = panel(f, breaks[i], breaks[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  std::size_t count = heap.size();
  while (!heap.empty() && total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (count >= opt.max_panels) {
      throw ConvergenceError("quad::integrate: panel budget exhausted (error estimate " +
                             std::to_string(total_err) + ")");
    }
    Panel p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      // cannot bisect further in double precision; accept this panel as is
      total_err -= p.error;
      continue;
    }
    Panel l = panel(f, p.a, mid), r = panel(f, mid, p.b);
    total += l.value + r.value - p.value;
    total_err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // Re-sum the surviving panels to shed the running-update rounding.
  double sum = 0.0, err = 0.0;
  std::vector<Panel> rest;
  rest.reserve(heap.size());
  while (!heap.empty()) {
    rest.push_back(heap.top());
    heap.pop();
  }
  std::sort(rest.begin(), rest.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : rest) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, count};
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opt) {
  const double br[2] = {a, b};
  return integrate(f, std::span<const double>(br, 2), opt);
}

}  // namespace frl::quad
