#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "frl/error.hpp"
#include "frl/estimators.hpp"

using namespace frl;
using namespace frl::est;

namespace {

spectral::Spectrum synthetic(std::size_t N, double rho, bool modulated) {
  spectral::Spectrum s;
  s.coeffs.assign(N, cplx(0.0));
  s.coeffs[0] = 1.0;
  for (std::size_t k = 1; 2 * k < N; ++k) {
    double a = std::pow(double(k), -rho);
    if (modulated) a *= 0.05 + std::abs(std::cos(0.37 * double(k)));
    s.coeffs[k] = a;
    s.coeffs[N - k] = a;
  }
  return s;
}

catalog::AnalyticFunction lambda(std::function<double(double)> f, double L = 1.0) {
  return {std::move(f), L, {0.0}, "test"};
}

}  // namespace

TEST_CASE("line fit") {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.rms < 1e-12);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1}, std::vector<double>{1}), DomainError);
}

TEST_CASE("decay slopes on synthetic spectra") {
  const auto pure = synthetic(1u << 14, 2.0, false);
  CHECK(decay_slope_two_point(pure, 10, 100).slope == doctest::Approx(-2.0));
  CHECK(decay_slope_envelope(pure).slope == doctest::Approx(-2.0).epsilon(1e-3));
  const std::vector<long> ks{3, 9, 27, 81, 243};
  CHECK(decay_slope_points(pure, ks).slope == doctest::Approx(-2.0));

  const auto mod = synthetic(1u << 16, 1.5, true);
  const auto env = decay_slope_envelope(mod);
  CHECK(env.slope == doctest::Approx(-1.5).epsilon(0.05 / 1.5));
  CHECK(env.method == SlopeMethod::EnvelopeLSQ);
  CHECK(env.k.size() == env.amp.size());

  CHECK_THROWS_AS(decay_slope_two_point(pure, 100, 10), DomainError);
  CHECK_THROWS_AS(decay_slope_envelope(pure, 16, 1u << 13), RangeError);
  CHECK_THROWS_AS(decay_slope_envelope(pure, 16, 17), PreconditionError);
}

TEST_CASE("holder exponents of simple functions") {
  const auto h = default_h_grid();
  CHECK(h.size() == 15);
  CHECK(h.front() == 0.0625);
  CHECK(holder_estimate(catalog::power_abs(0.7), h).mu_hat == doctest::Approx(0.7).epsilon(0.05 / 0.7));
  CHECK(holder_estimate(lambda([](double x) { return x; }), h).mu_hat == doctest::Approx(1.0).epsilon(0.02));
  CHECK(holder_estimate(lambda([](double x) { return std::sqrt(std::abs(x)); }), h).mu_hat ==
        doctest::Approx(0.5).epsilon(0.05));
  CHECK_THROWS_AS(holder_estimate(lambda([](double) { return 1.0; }), h), DomainError);
  CHECK_THROWS_AS(holder_estimate(catalog::power_abs(0.7), std::vector<double>{0.1, 0.2, 0.05, 0.01}), DomainError);
}

TEST_CASE("holder estimate is scale covariant and jitter stable") {
  const auto h = default_h_grid();
  const auto base = holder_estimate(catalog::power_abs(0.4), h);
  const auto scaled = holder_estimate(
      lambda([](double x) { return 3.0 * catalog::evaluate(catalog::power_abs(0.4), x); }), h);
  CHECK(scaled.mu_hat == doctest::Approx(base.mu_hat).epsilon(1e-9));
  CHECK(scaled.intercept == doctest::Approx(base.intercept + std::log(3.0)).epsilon(1e-9));
  const auto a = holder_estimate(catalog::power_abs(0.4), h, 20000, 11);
  const auto b = holder_estimate(catalog::power_abs(0.4), h, 20000, 11);
  CHECK(a.mu_hat == b.mu_hat);
  CHECK(a.mu_hat == doctest::Approx(0.4).epsilon(0.05 / 0.4));
}

TEST_CASE("oscillation counts") {
  CHECK(count_oscillations(catalog::power_abs(0.7), 0.01) == 2);
  CHECK(count_oscillations(catalog::exp_abs(1.0), 0.01) == 2);
  const auto d = catalog::chirp(0.7, 0.5);
  const auto f = catalog::as_function(d);
  for (double h : {0.1, 0.01}) {
    const std::size_t n = count_oscillations(f, h);
    CHECK(count_oscillations(lambda([&](double x) { return f.eval(x) + 5.0; }), h) == n);
    CHECK(count_oscillations(lambda([&](double x) { return -f.eval(x); }), h) == n);
  }
  CHECK_THROWS_AS(count_oscillations(f, 0.0), DomainError);
  CHECK_THROWS_AS(count_oscillations(f, 0.1, 100), DomainError);
}

TEST_CASE("oscillation profiles") {
  const std::vector<double> hs{1e-1, 1e-2, 1e-3, 1e-4};
  const auto pa = oscillation_profile(catalog::power_abs(0.7), hs);
  CHECK(pa.uniformly_bounded);
  CHECK(pa.extrema_counts.size() == 4);
  const auto ch = oscillation_profile(catalog::chirp(0.7, 0.5), hs);
  CHECK_FALSE(ch.uniformly_bounded);
  CHECK(ch.extrema_counts.back() > ch.extrema_counts.front());
  std::ostringstream os;
  write_profile_csv(os, pa);
  CHECK(os.str().rfind("h,extrema\n", 0) == 0);
}

TEST_CASE("total variation") {
  const auto sine = lambda([](double t) { return std::sin(2 * std::numbers::pi * t); }, 0.5);
  const auto grids = default_tv_grids();
  CHECK(grids.front() == 256);
  CHECK(grids.back() == (1u << 22));
  const auto tv = total_variation(sine, std::vector<std::size_t>{256, 512, 1024, 2048});
  CHECK(tv.tv_values.back() == doctest::Approx(4.0).epsilon(0.0025));
  CHECK_FALSE(tv.diverging);
  for (const auto& d : {catalog::chirp(0.7, 0.5), catalog::chirp(0.4, 0.5), catalog::weierstrass(0.5)}) {
    const auto e = total_variation(d, std::vector<std::size_t>{256, 512, 1024, 2048, 4096, 8192});
    for (std::size_t i = 1; i < e.tv_values.size(); ++i) CHECK(e.tv_values[i] >= e.tv_values[i - 1] - 1e-12);
  }
  CHECK(total_variation(catalog::weierstrass(0.5), std::vector<std::size_t>{1024, 2048, 4096, 8192, 16384}).diverging);
  CHECK_THROWS_AS(total_variation(sine, std::vector<std::size_t>{256, 1000}), PreconditionError);
}

TEST_CASE("json output") {
  const nlohmann::json j = decay_slope_two_point(synthetic(256, 2.0, false), 4, 16);
  CHECK(j.at("method") == method_name(SlopeMethod::TwoPoint));
  CHECK(j.at("slope").get<double>() == doctest::Approx(-2.0));
}
