#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "frl/error.hpp"
#include "frl/specfun.hpp"

using namespace frl;
using namespace frl::specfun;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gamma at integers and half integers") {
  CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(rel(specfun::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel(specfun::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-13);
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    fact *= n;
    CHECK(rel(specfun::gamma(n + 1.0), fact) < 1e-13);
  }
}

TEST_CASE("gamma against high precision values") {
  // mpmath, 30 digits
  CHECK(rel(specfun::gamma(-1.5), 2.3632718012073547031) < 1e-13);
  CHECK(rel(specfun::gamma(-2.5), -0.94530872048294188123) < 1e-13);
  CHECK(rel(specfun::gamma(0.1), 9.5135076986687312858) < 1e-13);
  CHECK(rel(specfun::gamma(171.2), 2.0285135805156115146e+307) < 1e-12);
}

TEST_CASE("gamma agrees with boost on a sweep") {
  for (double s = -9.75; s < 60.0; s += 0.37) {
    if (std::abs(s - std::round(s)) < 1e-9 && s <= 0) continue;
    INFO("s = " << s);
    CHECK(rel(specfun::gamma(s), boost::math::tgamma(s)) < 1e-12);
  }
}

TEST_CASE("gamma poles") {
  for (double s : {0.0, -1.0, -2.0, -17.0, -3.0 + 1e-13}) CHECK_THROWS_AS(specfun::gamma(s), PoleError);
  CHECK_NOTHROW(specfun::gamma(-3.0 + 1e-9));
  CHECK_THROWS_AS(specfun::gamma(std::nan("")), DomainError);
}

TEST_CASE("recurrence and reflection") {
  for (double s : {0.3, 1.7, 4.2, 9.9}) CHECK(std::abs(specfun::gamma(s + 1) - s * specfun::gamma(s)) / specfun::gamma(s + 1) < 1e-12);
  for (double s : {0.25, 0.5, 0.8}) {
    const double ref = std::numbers::pi / std::sin(std::numbers::pi * s);
    CHECK(std::abs(specfun::gamma(s) * specfun::gamma(1 - s) - ref) / ref < 1e-12);
  }
}

TEST_CASE("sin_pi is exact at integers") {
  for (int n = -5; n <= 5; ++n) CHECK(sin_pi(n) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1e6 + 0.5) == doctest::Approx(1.0));
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(std::isinf(std::tgamma(172.5)));  // overflow point, log_gamma stays finite
  CHECK(rel(log_gamma(171.5), 709.14316303092824227) < 1e-14);
  CHECK(rel(log_gamma(1e5), 1051287.7089736568949) < 1e-14);
  for (double s = 0.05; s <= 100.0; s *= 1.3) CHECK(rel(std::exp(log_gamma(s)), specfun::gamma(s)) < 1e-10);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("log_abs_gamma sign") {
  int sign = 0;
  CHECK(log_abs_gamma(-0.5, sign) == doctest::Approx(std::log(2 * std::sqrt(std::numbers::pi))));
  CHECK(sign == -1);
  log_abs_gamma(-1.5, sign);
  CHECK(sign == 1);
  log_abs_gamma(3.5, sign);
  CHECK(sign == 1);
}

TEST_CASE("stirling") {
  CHECK(rel(stirling(1.0), 0.92213700889578911688) < 1e-14);
  CHECK(std::abs(specfun::gamma(101.0) / stirling(100.0) - 1.0) < 1e-3);
  CHECK(std::abs(std::exp(log_gamma(10001.0) - log_stirling(1e4)) - 1.0) < 1e-5);
  CHECK_THROWS_AS(stirling(0.0), DomainError);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, {2, 1}) == doctest::Approx(20.0).epsilon(1e-13));
  CHECK(falling_factorial(6, {3, 2}) == doctest::Approx(48.0).epsilon(1e-13));
  // mpmath reference of Gamma(1001)/Gamma(1000.3)/1000^0.7
  CHECK(rel(falling_factorial(1000, {0.7, 1}) / std::pow(1000.0, 0.7), 1.0001050125100659387) < 1e-12);
  CHECK(rel(falling_factorial(1e5, {0.7, 1}) / std::pow(1e5, 0.7), 1.0000010499677447061) < 1e-12);
  CHECK_THROWS_AS(falling_factorial(-1.0, {0.5, 1.0}), PoleError);
  CHECK_THROWS_AS(falling_factorial(1.0, {0.5, 0.0}), DomainError);
}

TEST_CASE("factorial polynomial difference rule") {
  for (double g : {0.5, 1.0, 2.3}) {
    for (double h : {0.1, 1.0}) {
      for (double t : {2.0, 10.0, 50.0}) {
        const auto f = [&](double x) { return falling_factorial(x, {g, h}); };
        const double lhs = forward_difference(f, t, h);
        const double rhs = g * h * falling_factorial(t, {g - 1.0, h});
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("factorial polynomial is asymptotically a power") {
  double prev = 1.0;
  for (double t : {1e3, 1e4, 1e5}) {
    const double err = std::abs(falling_factorial(t, {0.7, 1.0}) / std::pow(t, 0.7) - 1.0);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(std::abs(falling_factorial(1e3, {0.7, 1.0}) / std::pow(1e3, 0.7) - 1.0) < 0.01);
  CHECK(prev < 0.001);
}

TEST_CASE("(t-x)^(t-x) against e^-x t^(t-x)") {
  const double t = 1e4, x = 2.0;
  const double log_ratio = (t - x) * std::log(t - x) - (-x + (t - x) * std::log(t));
  CHECK(std::abs(std::exp(log_ratio) - 1.0) < 1e-3);
}

TEST_CASE("forward difference") {
  CHECK(forward_difference([](double t) { return t; }, 3.0, 0.5) == 0.5);
  CHECK(forward_difference([](double) { return 7.0; }, 1.0, 2.0) == 0.0);
  CHECK(forward_difference([](double t) { return t * t; }, 1.0, 1.0) == 3.0);
}
