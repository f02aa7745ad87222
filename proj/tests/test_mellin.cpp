#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frl/catalog.hpp"
#include "frl/mellin.hpp"
#include "frl/spectral.hpp"

using namespace frl;
using namespace frl::mellin;

namespace {

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

HFunctionSpec sine_spec() {
  HFunctionSpec s;
  s.m = 1;
  s.n = 0;
  s.p = 1;
  s.q = 2;
  s.upper = {{0.0, 0.5}};
  s.lower = {{0.0, 1.0}, {0.0, 0.5}};
  s.prefactor = std::numbers::pi;
  s.sigma = 0.5;
  return s;
}

HFunctionSpec cosine_spec() {
  auto s = sine_spec();
  s.upper = {{0.5, 0.5}};
  s.lower[1] = {0.5, 0.5};
  return s;
}

}  // namespace

TEST_CASE("complex gamma against high-precision values") {
  CHECK(close(mellin::gamma({0.3, 2.0}), {0.0574653375695880335, -0.0749849125826461382}, 1e-13));
  CHECK(close(mellin::gamma({-1.5, 3.0}), {-0.00209603816053931913, 0.000692225954663543866}, 1e-12));
  CHECK(close(mellin::gamma({2.0, 100.0}), {1.27656837511972166e-67, -1.51453226265331772e-65}, 1e-11));
  CHECK(close(mellin::gamma({0.5, 10.0}), {3.3787243762342358e-7, 1.68936983903891891e-7}, 1e-12));
  CHECK(close(mellin::gamma({-7.3, -0.4}), {3.67664608414258424e-5, -1.85762638161875266e-4}, 1e-12));
  CHECK(close(mellin::gamma({0.001, 150.0}), {-6.95732019634156947e-104, -6.70212553510371331e-104}, 1e-10));
  CHECK(std::abs(mellin::gamma({0.5, 10.0})) ==
        doctest::Approx(std::sqrt(std::numbers::pi / std::cosh(10.0 * std::numbers::pi))).epsilon(1e-12));
  CHECK_THROWS_AS(mellin::gamma({-3.0, 0.0}), PoleError);
}

TEST_CASE("complex gamma identities") {
  for (double x : {-2.7, -0.4, 0.2, 1.3, 4.6}) {
    for (double y : {-30.0, -1.0, 0.5, 7.0}) {
      const cplx s{x, y};
      // reflection
      const cplx lhs = mellin::gamma(s) * mellin::gamma(1.0 - s);
      const cplx rhs = std::numbers::pi / std::sin(std::numbers::pi * s);
      CHECK(close(lhs, rhs, 1e-11));
      // recurrence and conjugate symmetry
      CHECK(close(mellin::gamma(s + 1.0), s * mellin::gamma(s), 1e-12));
      CHECK(close(mellin::gamma(std::conj(s)), std::conj(mellin::gamma(s)), 1e-14));
    }
  }
  CHECK(mellin::gamma(cplx(5.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("Mellin-Barnes inversion of sine and cosine") {
  for (double x : {0.3, 1.0, 2.5, 6.0}) {
    INFO("x=" << x);
    CHECK(mb_integrate(sine_spec(), x).value.real() == doctest::Approx(std::sin(x)).epsilon(1e-10));
    CHECK(mb_integrate(cosine_spec(), x).value.real() == doctest::Approx(std::cos(x)).epsilon(1e-10));
    CHECK(std::abs(mb_integrate(sine_spec(), x).value.imag()) < 1e-10);
  }
}

TEST_CASE("spec validation, mu and clearance") {
  CHECK(mu(sine_spec()) == doctest::Approx(1.0));
  CHECK(pole_clearance(sine_spec()) == doctest::Approx(0.5));
  auto bad = sine_spec();
  bad.sigma = -0.5;  // on the far side of the pole at 0
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  bad = sine_spec();
  bad.lower[0].C = -1.0;
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  bad = sine_spec();
  bad.q = 3;
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  CHECK_THROWS_AS(mb_integrate(sine_spec(), -1.0), DomainError);
}

TEST_CASE("chirp H-function specs") {
  for (auto which : {ChirpIntegral::I1, ChirpIntegral::I2}) {
    const auto s = build_chirp_spec({0.9, 0.4, which});
    CHECK_NOTHROW(validate(s));
    CHECK(s.m == 1);
    CHECK(s.n == 2);
    CHECK(s.p == 5);
    CHECK(s.q == 3);
    CHECK(mu(s) == doctest::Approx(-(1 / 0.16 + 1 / 0.4)));
  }
  CHECK(h_asymptotic_exponent(build_chirp_spec({0.7, 0.5, ChirpIntegral::I1})) == doctest::Approx(-0.25));
  CHECK(h_asymptotic_exponent(build_chirp_spec({0.9, 0.4, ChirpIntegral::I1})) == doctest::Approx(-0.16));
  CHECK_THROWS_AS(h_asymptotic_exponent(sine_spec()), PreconditionError);
}

TEST_CASE("mu grid") {
  // mu depends on beta alone: -(1/beta^2 + 1/beta), -6 at beta = 1/2
  for (double alpha : {0.3, 0.7, 1.1, 1.6}) {
    for (double beta : {0.2, 0.45, 0.8, 1.5, 2.5}) {
      if (alpha <= beta) continue;
      const double expect = -(1 / (beta * beta) + 1 / beta);
      CHECK(mu(build_chirp_spec({alpha, beta, ChirpIntegral::I1})) == doctest::Approx(expect));
      CHECK(mu(build_chirp_spec({alpha, beta, ChirpIntegral::I2})) == doctest::Approx(expect));
    }
  }
}

TEST_CASE("MB and direct quadrature agree with independent values") {
  const ChirpIntegralSpec i1{0.7, 0.5, ChirpIntegral::I1}, i2{0.7, 0.5, ChirpIntegral::I2};
  CHECK(chirp_integral(i1, 10, Method::MB) == doctest::Approx(-0.150982214135).epsilon(1e-9));
  CHECK(chirp_integral(i1, 100, Method::MB) == doctest::Approx(1.25497210939).epsilon(1e-9));
  CHECK(chirp_integral(i2, 10, Method::MB) == doctest::Approx(-0.950148934038).epsilon(1e-9));
  CHECK(chirp_integral(i2, 100, Method::MB) == doctest::Approx(-0.0857298503165).epsilon(1e-9));
  CHECK(chirp_integral(i1, 10, Method::Direct) == doctest::Approx(-0.150982214135).epsilon(1e-8));
  CHECK(chirp_integral(i1, 100, Method::Direct) == doctest::Approx(1.25497210939).epsilon(1e-8));
  CHECK(chirp_integral(i2, 10, Method::Direct) == doctest::Approx(-0.950148934038).epsilon(1e-8));
  CHECK(chirp_integral(i2, 100, Method::Direct) == doctest::Approx(-0.0857298503165).epsilon(1e-8));
}

TEST_CASE("MB self-consistency") {
  const auto spec = build_chirp_spec({0.9, 0.4, ChirpIntegral::I1});
  const double z = std::pow(300.0, -1.0 / 0.4);
  const auto base = mb_integrate(spec, z);
  MbOptions fine;
  fine.step = base.step / 2;
  MbOptions longer;
  longer.t_max = 2 * base.t_max;
  CHECK(std::abs(mb_integrate(spec, z, fine).value - base.value) < 1e-8 * std::max(1.0, std::abs(base.value)));
  CHECK(std::abs(mb_integrate(spec, z, longer).value - base.value) < 1e-8 * std::max(1.0, std::abs(base.value)));
  CHECK(base.end_magnitude <= 1e-14 * base.peak_magnitude);
  CHECK(base.coarse_delta < 1e-6);
}

TEST_CASE("direct quadrature internals") {
  DirectOptions zero;
  zero.zero_integrand = true;
  CHECK(direct_oscillatory_I({0.7, 0.5, ChirpIntegral::I1}, 50, zero).value == 0.0);
  const auto r = direct_oscillatory_I({0.9, 0.4, ChirpIntegral::I1}, 200);
  REQUIRE(r.tail_lobe_magnitudes.size() > 3);
  for (std::size_t i = 1; i < r.tail_lobe_magnitudes.size(); ++i) {
    CHECK(r.tail_lobe_magnitudes[i] <= r.tail_lobe_magnitudes[i - 1]);
  }
  CHECK(r.value == doctest::Approx(r.head + r.middle + r.tail));
  DirectOptions shifted;
  shifted.tail_start_scale = 2.0;
  CHECK(direct_oscillatory_I({0.9, 0.4, ChirpIntegral::I1}, 200, shifted).value ==
        doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("chirp Fourier transform") {
  for (double nu : {5.0, 10.0}) {
    const double mb = chirp_ft(0.7, 0.5, nu, Method::MB);
    CHECK(chirp_ft(0.7, 0.5, nu, Method::Direct) == doctest::Approx(mb).epsilon(1e-7));
  }
  CHECK_THROWS_AS(chirp_ft(0.7, 0.5, 0.0, Method::MB), DomainError);
}

TEST_CASE("periodized chirp coefficients follow the transform") {
  // c_k of the 2 pi periodization differs from FT(k / 2 pi) / 2 pi by the
  // cut-off tail, which is O(|f'(pi)| / k^2) at integer k.
  const double a = 0.7, b = 0.5, pi = std::numbers::pi;
  const double fp = a * std::pow(pi, a - 1) * std::sin(std::pow(pi, -b)) -
                    b * std::pow(pi, a - b - 1) * std::cos(std::pow(pi, -b));
  const auto spec = spectral::dft(spectral::sample(catalog::chirp(a, b, pi), 1u << 20));
  for (long k : {20L, 50L, 120L}) {
    const double ck = spectral::centered_coefficient(spec, k).real();
    const double ft = chirp_ft(a, b, k / (2 * pi), Method::MB) / (2 * pi);
    CHECK(std::abs(ck - ft) <= 2 * std::abs(fp) / (pi * k * k));
  }
}

TEST_CASE("method names and json") {
  CHECK(method_from_name("mb") == Method::MB);
  CHECK(method_from_name("direct") == Method::Direct);
  CHECK_THROWS_AS(method_from_name("fft"), DomainError);
  const nlohmann::json j = build_chirp_spec({0.7, 0.5, ChirpIntegral::I2});
  const auto back = j.get<HFunctionSpec>();
  CHECK(back.p == 5);
  CHECK(back.upper.size() == 5);
  CHECK(back.prefactor.real() == doctest::Approx(-std::numbers::pi * std::numbers::pi / 0.5));
  const nlohmann::json r = mb_integrate(sine_spec(), 1.0);
  CHECK(r.contains("coarse_delta"));
}
