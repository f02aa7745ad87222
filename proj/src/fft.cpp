#include "frl/fft.hpp"

#include <bit>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "frl/error.hpp"

namespace frl {

struct FftPlan::Radix2 {
  std::size_t n;
  std::size_t log2n;
  std::vector<cplx> twiddle;  // exp(-2 pi i k / n), k < n/2
  std::vector<std::uint32_t> bitrev;

  explicit Radix2(std::size_t size) : n(size), log2n(std::countr_zero(size)) {
    twiddle.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(n));
    }
    bitrev.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b) {
        if (i & (std::size_t{1} << b)) r |= std::uint32_t{1} << (log2n - 1 - b);
      }
      bitrev[i] = r;
    }
  }

  void run(std::span<cplx> a) const {
    for (std::size_t i = 0; i < n; ++i) {
      if (i < bitrev[i]) std::swap(a[i], a[bitrev[i]]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t j = 0; j < half; ++j) {
          const cplx w = twiddle[j * stride];
          const cplx u = a[start + j];
          const cplx v = a[start + j + half] * w;
          a[start + j] = u + v;
          a[start + j + half] = u - v;
        }
      }
    }
  }
};

struct FftPlan::Bluestein {
  std::size_t n;
  Radix2 inner;
  std::vector<cplx> chirp;       // exp(-i pi k^2 / n)
  std::vector<cplx> kernel_hat;  // FFT of the conjugate chirp, wrapped

  static std::size_t padded(std::size_t size) { return std::bit_ceil(2 * size - 1); }

  explicit Bluestein(std::size_t size) : n(size), inner(padded(size)) {
    chirp.resize(n);
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the phase argument small and exact.
      const std::uint64_t kk = static_cast<std::uint64_t>(k) * k % two_n;
      chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(kk) /
                                     static_cast<double>(n));
    }
    const std::size_t m = inner.n;
    kernel_hat.assign(m, cplx{});
    kernel_hat[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      kernel_hat[k] = std::conj(chirp[k]);
      kernel_hat[m - k] = std::conj(chirp[k]);
    }
    inner.run(kernel_hat);
  }

  void run(std::span<cplx> a) const {
    const std::size_t m = inner.n;
    std::vector<cplx> work(m);
    for (std::size_t k = 0; k < n; ++k) work[k] = a[k] * chirp[k];
    inner.run(work);
    for (std::size_t k = 0; k < m; ++k) work[k] = std::conj(work[k] * kernel_hat[k]);
    inner.run(work);  // conj(FFT(conj(.))) = m * IFFT(.)
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = std::conj(work[k]) * scale * chirp[k];
  }
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw DomainError("FftPlan: size must be positive");
  if (std::has_single_bit(n)) {
    radix2_ = std::make_unique<Radix2>(n);
  } else {
    bluestein_ = std::make_unique<Bluestein>(n);
  }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

bool FftPlan::is_power_of_two() const noexcept { return radix2_ != nullptr; }

void FftPlan::forward(std::span<cplx> data) const {
  if (data.size() != n_) throw std::invalid_argument("FftPlan::forward: size mismatch");
  if (radix2_) {
    radix2_->run(data);
  } else {
    bluestein_->run(data);
  }
}

void FftPlan::inverse(std::span<cplx> data) const {
  for (auto& v : data) v = std::conj(v);
  forward(data);
  for (auto& v : data) v = std::conj(v);
}

}  // namespace frl
