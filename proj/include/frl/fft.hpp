#pragma once

// Complex FFT: iterative radix-2 for power-of-two sizes, Bluestein chirp-z for
// everything else. Plans hold immutable twiddle tables and may be shared
// across threads.

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace frl {

using cplx = std::complex<double>;

class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept { return n_; }
  bool is_power_of_two() const noexcept;

  /// In place, unnormalized: X_k = sum_n x_n exp(-2 pi i k n / N).
  void forward(std::span<cplx> data) const;
  /// In place, unnormalized: x_n = sum_k X_k exp(+2 pi i k n / N).
  void inverse(std::span<cplx> data) const;

 private:
  struct Radix2;
  struct Bluestein;
  std::size_t n_;
  std::unique_ptr<Radix2> radix2_;
  std::unique_ptr<Bluestein> bluestein_;
};

}  // namespace frl
