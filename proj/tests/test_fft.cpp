#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "frl/fft.hpp"
#include "frl/spectral.hpp"

using namespace frl;

namespace {

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> x(n);
  for (auto& v : x) v = {u(rng), u(rng)};
  return x;
}

// Unnormalized textbook DFT in long double.
std::vector<cplx> reference(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<long double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double ang = sign * 2.0L * std::numbers::pi_v<long double> * ((k * j) % n) / n;
      acc += std::complex<long double>(x[j].real(), x[j].imag()) * std::polar(1.0L, ang);
    }
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

}  // namespace

TEST_CASE("forward matches reference for every size up to 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    auto x = random_signal(n, static_cast<unsigned>(n));
    const auto ref = reference(x, -1);
    FftPlan plan(n);
    CHECK(plan.is_power_of_two() == ((n & (n - 1)) == 0));
    plan.forward(x);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(x[k] - ref[k]));
    INFO("n = " << n);
    CHECK(err < 1e-11 * static_cast<double>(n));
  }
}

TEST_CASE("inverse matches reference on awkward sizes") {
  for (std::size_t n : {97u, 100u, 243u, 1000u}) {
    auto x = random_signal(n, 7);
    const auto ref = reference(x, +1);
    FftPlan(n).inverse(x);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(x[k] - ref[k]));
    CHECK(err < 1e-10);
  }
}

TEST_CASE("round trip at 2e5 (Bluestein) and 2^17 (radix 2)") {
  for (std::size_t n : {200000u, 131072u}) {
    const auto x0 = random_signal(n, 3);
    auto x = x0;
    FftPlan plan(n);
    plan.forward(x);
    plan.inverse(x);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(x[k] / double(n) - x0[k]));
    CHECK(err < 1e-12);
  }
}

TEST_CASE("plans are shareable between threads") {
  const std::size_t n = 4096 + 3;
  FftPlan plan(n);
  std::vector<std::vector<cplx>> batch;
  for (unsigned s = 0; s < 8; ++s) batch.push_back(random_signal(n, s));
  auto serial = batch;
  for (auto& v : serial) plan.forward(v);
#pragma omp parallel for
  for (int i = 0; i < 8; ++i) plan.forward(batch[i]);
  for (int i = 0; i < 8; ++i) CHECK(batch[i] == serial[i]);
}

TEST_CASE("empty and unit sizes") {
  std::vector<cplx> one{{2.0, -1.0}};
  FftPlan(1).forward(one);
  CHECK(one[0] == cplx(2.0, -1.0));
  CHECK_THROWS(FftPlan(0));
}
