#pragma once

// Sampling, 1/N-normalized DFT, Fourier-coefficient access, tail sums and a
// quadrature Fourier transform on the line.

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "frl/catalog.hpp"
#include "frl/fft.hpp"

namespace frl::spectral {

/// Samples at t_n = -T/2 + n T/N, n = 0..N-1.
struct SampledSignal {
  std::vector<double> samples;
  double period = 2.0;
  std::optional<catalog::FunctionDescriptor> descriptor;

  std::size_t size() const noexcept { return samples.size(); }
  double t(std::size_t n) const noexcept {
    return -0.5 * period + period * static_cast<double>(n) / static_cast<double>(samples.size());
  }
};

/// DFT bins in natural order; bins above N/2 hold the negative frequencies.
struct Spectrum {
  std::vector<cplx> coeffs;
  double period = 2.0;

  std::size_t size() const noexcept { return coeffs.size(); }
};

SampledSignal sample(const catalog::FunctionDescriptor& d, std::size_t N);
SampledSignal sample(const catalog::AnalyticFunction& f, std::size_t N);

/// F_k = (1/N) sum_n f_n exp(-2 pi i k n / N), via FFT.
Spectrum dft(const SampledSignal& s);
Spectrum dft(std::span<const cplx> x, double period = 1.0);

/// f_n = sum_k F_k exp(+2 pi i k n / N).
std::vector<cplx> inverse_dft(const Spectrum& spec);

/// O(N^2) reference with the same normalization; for tests.
std::vector<cplx> naive_dft(std::span<const cplx> x);

/// Coefficient for signed index k; RangeError when |k| >= N/2.
cplx coefficient(const Spectrum& spec, long k);

/// (-1)^k coefficient(k): the samples start at -T/2, so this undoes the
/// half-period shift and approximates c_k of the interval centred at 0.
cplx centered_coefficient(const Spectrum& spec, long k);

/// sum over Nc < |k| < N/2 of |k|^m |c_k|^power, square-rooted for power 2.
double tail_sum(const Spectrum& spec, long Nc, int m, int power);

struct FtOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_panels = 1'000'000;
};

/// Windowed Fourier transform on the line, integral over [-W, W] of
/// f(t) exp(-2 pi i nu t). The catalog formula is used on all of [-W, W];
/// periodic or singular kinds (Weierstrass, Cantor-Lebesgue) are rejected.
cplx ft_numeric(const catalog::FunctionDescriptor& d, double nu, double window_halfwidth,
                const FtOptions& opt = {});

void write_signal_csv(std::ostream& os, const SampledSignal& s);
/// Rows k = 0..min(N/2, kmax) - 1 unless kmax == 0 (all non-negative k).
void write_spectrum_csv(std::ostream& os, const Spectrum& spec, std::size_t kmax = 0);

}  // namespace frl::spectral
