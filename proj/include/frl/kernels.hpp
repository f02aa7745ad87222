#pragma once

// Hot loops shared by spectral and estimators. Each kernel exists twice: a
// plain serial reference and an OpenMP version whose reductions run over
// fixed-size blocks combined in index order, so results do not depend on the
// thread count.

#include <cstddef>
#include <functional>
#include <span>

namespace frl::kernels {

using Fn = std::function<double(double)>;

/// Reduction block length used by the OpenMP kernels.
inline constexpr std::size_t kBlock = 4096;

namespace serial {
void evaluate(const Fn& f, std::span<const double> t, std::span<double> out);
/// max_i |f(t_i + h) - f(t_i)|
double sup_abs_difference(const Fn& f, std::span<const double> t, double h);
/// sum_i |v[(i+1)s] - v[i s]| over the strided subsequence.
double abs_increment_sum(std::span<const double> v, std::size_t stride = 1);
}  // namespace serial

namespace omp {
void evaluate(const Fn& f, std::span<const double> t, std::span<double> out);
double sup_abs_difference(const Fn& f, std::span<const double> t, double h);
double abs_increment_sum(std::span<const double> v, std::size_t stride = 1);
}  // namespace omp

/// Applies the FRL_THREADS cap (if set) and returns the effective thread count.
int apply_thread_cap();
int max_threads();

}  // namespace frl::kernels
