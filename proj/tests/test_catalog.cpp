#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frl/catalog.hpp"
#include "frl/error.hpp"

using namespace frl;
using namespace frl::catalog;

TEST_CASE("validation") {
  CHECK_THROWS_AS(chirp(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(chirp(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(power_abs(1.0), DomainError);
  CHECK_THROWS_AS(gauss_power(0.0), DomainError);
  CHECK_THROWS_AS(weierstrass(0.5, 1), DomainError);
  CHECK_THROWS_AS(cantor_lebesgue(0), DomainError);
  CHECK_THROWS_AS(exp_abs(0.0), DomainError);
  CHECK_THROWS_AS(power_abs(0.5, 0.0), DomainError);
  CHECK_NOTHROW(chirp(0.4, 0.5));
}

TEST_CASE("evaluate examples") {
  CHECK(std::abs(evaluate(chirp(0.7, 0.5), std::pow(2 * std::numbers::pi * 7, -2.0))) < 1e-13);
  CHECK(evaluate(chirp(0.7, 0.5), 0.0) == 0.0);
  CHECK(evaluate(power_abs(0.7), -1.0) == 1.0);
  CHECK(evaluate(power_abs(0.7), 0.0) == 0.0);
  CHECK(evaluate(cantor_lebesgue(), 1.0 / 3.0) == doctest::Approx(0.5));
  CHECK(evaluate(cantor_lebesgue(), 0.0) == 0.0);
  CHECK(evaluate(cantor_lebesgue(), 1.0) == 1.0);
  CHECK(evaluate(cantor_lebesgue(), 0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(evaluate(exp_abs(2.0), -1.0) == doctest::Approx(std::exp(-2.0)));
  CHECK(evaluate(gauss_power(0.5), 1.0) == doctest::Approx(std::exp(-std::numbers::pi)));
  CHECK_THROWS_AS(evaluate(power_abs(0.7), 1.5), DomainError);
  CHECK_NOTHROW(evaluate(power_abs(0.7, 2.0), 1.5));
}

TEST_CASE("chirp keeps accuracy close to zero") {
  // sin(x^-0.5) with x^-0.5 ~ 1e6: compare against a long double reference
  const auto d = chirp(0.7, 0.5);
  for (double x : {1e-12, 3.3e-11, 7e-9, 5e-5}) {
    const long double w = 1.0L / std::sqrt(static_cast<long double>(x));
    const double expect = std::pow(x, 0.7) * static_cast<double>(std::sin(w));
    CHECK(evaluate(d, x) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("evenness") {
  for (const auto& d : {chirp(0.7, 0.5), power_abs(0.3), exp_abs(1.5), gauss_power(0.5), weierstrass(0.5)}) {
    for (double x = 0.013; x < 1.0; x += 0.0731) CHECK(evaluate(d, x) == evaluate(d, -x));
  }
}

TEST_CASE("chirp sign is constant between sine zeros") {
  const auto d = chirp(0.7, 0.5);
  for (int n = 1; n <= 10; ++n) {
    const double hi = std::pow(n * std::numbers::pi, -2.0);
    const double lo = std::pow((n + 1) * std::numbers::pi, -2.0);
    const double sign = n % 2 == 1 ? -1.0 : 1.0;  // sin on ((n) pi, (n+1) pi)
    for (int i = 1; i < 200; ++i) CHECK(sign * evaluate(d, lo + (hi - lo) * i / 200.0) > 0.0);
  }
}

TEST_CASE("cantor-lebesgue is a monotone staircase") {
  const auto d = cantor_lebesgue();
  double prev = -1.0;
  for (int i = 0; i <= 10000; ++i) {
    const double v = evaluate(d, i / 10000.0);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(evaluate(cantor_lebesgue(40, 2.0), 2.0 / 3.0) == doctest::Approx(0.5));
  CHECK(evaluate(cantor_lebesgue(), -0.5) == evaluate(cantor_lebesgue(), 0.5));
}

TEST_CASE("weierstrass truncation bound") {
  // b^{-K mu}/(1 - b^{-mu}) bounds the tail after K terms
  const double mu = 0.5, b = 3.0;
  const auto d = weierstrass(mu);
  for (double x : {0.1, 0.37, -0.8}) {
    for (int K : {5, 10, 20}) {
      double partial = 0.0;
      for (int k = 1; k <= K; ++k) partial += std::pow(b, -k * mu) * std::cos(std::pow(b, k) * std::numbers::pi * x);
      const double bound = std::pow(b, -K * mu) / (1 - std::pow(b, -mu));
      CHECK(std::abs(evaluate(d, x) - partial) <= bound * (1 + 1e-9));
    }
  }
}

TEST_CASE("metadata") {
  CHECK(metadata(chirp(0.7, 0.5)).holder_exponent_bound == doctest::Approx(7.0 / 15.0));
  CHECK(metadata(chirp(0.9, 0.4)).holder_exponent_bound == doctest::Approx(9.0 / 14.0));
  CHECK(*metadata(chirp(0.7, 0.5)).decay_exponent_predicted == doctest::Approx(1.3));
  CHECK(metadata(chirp(0.7, 0.5)).is_ac);
  CHECK_FALSE(metadata(chirp(0.7, 0.5)).finite_oscillations);
  CHECK_FALSE(metadata(chirp(0.4, 0.5)).is_bv);
  CHECK_FALSE(metadata(chirp(0.4, 0.5)).decay_exponent_predicted);
  CHECK_FALSE(metadata(chirp(0.5, 0.25)).decay_exponent_predicted);  // 0.5 + 0 == 0.25 + 0.25 * 1
  CHECK(*metadata(power_abs(0.7)).decay_exponent_predicted == doctest::Approx(1.7));
  CHECK(metadata(power_abs(0.7)).finite_oscillations);
  CHECK(*metadata(weierstrass(0.5)).decay_exponent_predicted == 0.5);
  CHECK_FALSE(metadata(weierstrass(0.5)).is_bv);
  const auto cl = metadata(cantor_lebesgue());
  CHECK(cl.holder_exponent_bound == doctest::Approx(std::log(2) / std::log(3)));
  CHECK(cl.is_bv);
  CHECK_FALSE(cl.is_ac);
  CHECK(*cl.decay_exponent_predicted == 1.0);
  CHECK(*metadata(exp_abs(1.0)).decay_exponent_predicted == 2.0);
  CHECK(metadata(exp_abs(1.0)).holder_exponent_bound == 1.0);
  for (const auto& d : {chirp(3.0, 0.5), chirp(0.1, 2.0)}) {
    const double h = metadata(d).holder_exponent_bound;
    CHECK(h > 0.0);
    CHECK(h <= 1.0);
  }
}

TEST_CASE("closed form transform") {
  CHECK(*closed_form_ft(exp_abs(1.0), 0.0) == 2.0);
  CHECK(*closed_form_ft(exp_abs(1.0), 10.0) == doctest::Approx(2.0 / (1 + 400 * std::numbers::pi * std::numbers::pi)));
  CHECK(*closed_form_ft(exp_abs(2.0), 0.0) == 1.0);
  CHECK_FALSE(closed_form_ft(power_abs(0.5), 1.0));
}

TEST_CASE("json round trip") {
  for (const auto& d : {chirp(0.7, 0.5, 2.0), power_abs(0.3), weierstrass(0.5, 5), cantor_lebesgue(12),
                        exp_abs(1.5), gauss_power(0.5)}) {
    const nlohmann::json j = d;
    const auto back = j.get<FunctionDescriptor>();
    CHECK(describe(back) == describe(d));
    CHECK(back.half_width == d.half_width);
    CHECK(j.at("kind").get<std::string>() == kind_name(d.kind()));
  }
  CHECK_THROWS_AS(nlohmann::json::parse(R"({"kind":"chirp","params":{"alpha":-1,"beta":1}})").get<FunctionDescriptor>(),
                  DomainError);
  CHECK_THROWS_AS(kind_from_name("sawtooth"), DomainError);
  const nlohmann::json m = metadata(weierstrass(0.5));
  CHECK(m.at("decay_note") == "along k = b^j");
}

TEST_CASE("as_function") {
  const auto f = as_function(chirp(0.7, 0.5));
  CHECK(f.eval(0.3) == evaluate(chirp(0.7, 0.5), 0.3));
  CHECK(f.singular_points == std::vector<double>{0.0});
  CHECK(f.label == "chirp(0.7,0.5)");
}
