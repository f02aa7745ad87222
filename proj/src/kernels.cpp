#include "frl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

namespace frl::kernels {

namespace {

void check_sizes(std::span<const double> t, std::span<double> out) {
  if (t.size() != out.size()) throw std::invalid_argument("kernels::evaluate: size mismatch");
}

}  // namespace

namespace serial {

void evaluate(const Fn& f, std::span<const double> t, std::span<double> out) {
  check_sizes(t, out);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = f(t[i]);
}

double sup_abs_difference(const Fn& f, std::span<const double> t, double h) {
  double best = 0.0;
  for (double x : t) best = std::max(best, std::abs(f(x + h) - f(x)));
  return best;
}

double abs_increment_sum(std::span<const double> v, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("abs_increment_sum: stride must be > 0");
  double sum = 0.0;
  for (std::size_t i = stride; i < v.size(); i += stride) sum += std::abs(v[i] - v[i - stride]);
  return sum;
}

}  // namespace serial

namespace omp {

void evaluate(const Fn& f, std::span<const double> t, std::span<double> out) {
  check_sizes(t, out);
  const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = f(t[i]);
}

double sup_abs_difference(const Fn& f, std::span<const double> t, double h) {
  // max is order independent, so a plain reduction is already deterministic.
  const auto n = static_cast<std::ptrdiff_t>(t.size());
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::ptrdiff_t i = 0; i < n; ++i) best = std::max(best, std::abs(f(t[i] + h) - f(t[i])));
  return best;
}

double abs_increment_sum(std::span<const double> v, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("abs_increment_sum: stride must be > 0");
  if (v.size() <= stride) return 0.0;
  const std::size_t terms = (v.size() - 1) / stride;
  const std::size_t blocks = (terms + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock + 1;
    const std::size_t hi = std::min(terms, lo + kBlock - 1);
    double s = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) s += std::abs(v[i * stride] - v[(i - 1) * stride]);
    partial[b] = s;
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

}  // namespace omp

int apply_thread_cap() {
  if (const char* env = std::getenv("FRL_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_num_procs()));
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace frl::kernels
