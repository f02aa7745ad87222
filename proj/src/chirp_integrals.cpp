#include <algorithm>
#include <cmath>
#include <numbers>

#include "frl/mellin.hpp"
#include "frl/quadrature.hpp"
#include "frl/specfun.hpp"

namespace frl::mellin {

namespace {

constexpr double kPi = std::numbers::pi;

void check_chirp(const ChirpIntegralSpec& c) {
  if (!(c.beta > 0.0 && c.alpha > c.beta)) {
    throw PreconditionError("chirp integral: need 0 < beta < alpha");
  }
}

// Repeated averaging of the last few partial sums of an alternating series.
double euler_estimate(const std::vector<double>& partial, int depth) {
  const std::size_t take = std::min<std::size_t>(partial.size(), static_cast<std::size_t>(depth) + 1);
  std::vector<double> row(partial.end() - static_cast<std::ptrdiff_t>(take), partial.end());
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return row.front();
}

struct LobeSum {
  double value = 0.0;
  std::size_t lobes = 0;
  std::vector<double> magnitudes;
};

// Sum of lobe integrals of f over [x0 + j pi, x0 + (j+1) pi], j = 0, 1, ...
template <class F>
LobeSum alternating_lobes(F&& f, double x0, const DirectOptions& opt) {
  const quad::Options q{1e-300, 1e-13, 10000};
  LobeSum out;
  std::vector<double> partial;
  double acc = 0.0, last = 0.0;
  int calm = 0;
  for (std::size_t j = 0; j < opt.max_lobes; ++j) {
    const double a = x0 + kPi * static_cast<double>(j);
    const double lobe = quad::integrate(f, a, a + kPi, q).value;
    acc += lobe;
    partial.push_back(acc);
    out.magnitudes.push_back(std::abs(lobe));
    const double est = euler_estimate(partial, opt.euler_depth);
    if (j >= 3) {
      calm = std::abs(est - last) <= opt.tol * std::max(1.0, std::abs(est)) ? calm + 1 : 0;
      if (calm >= 2) {
        out.value = est;
        out.lobes = j + 1;
        return out;
      }
    }
    last = est;
  }
  throw ConvergenceError("direct_oscillatory_I: alternating lobe sum did not settle");
}

}  // namespace

HFunctionSpec build_chirp_spec(const ChirpIntegralSpec& c) {
  check_chirp(c);
  const double a = c.alpha, b = c.beta;
  const double b2 = b * b;
  HFunctionSpec s;
  s.m = 1;
  s.n = 2;
  s.p = 5;
  s.q = 3;
  if (c.which == ChirpIntegral::I1) {
    // G(u/b) G(1 - u/b^2) G(a - u/b)
    // / [G(1 + u/b) G(u/(2b^2)) G((2-a)/2 + u/(2b)) G(1 - u/(2b^2)) G(a/2 - u/(2b))]
    s.upper = {{0.0, 1.0 / b2},
               {1.0 - a, 1.0 / b},
               {1.0, 1.0 / b},
               {0.0, 1.0 / (2.0 * b2)},
               {(2.0 - a) / 2.0, 1.0 / (2.0 * b)}};
    s.lower = {{0.0, 1.0 / b}, {0.0, 1.0 / (2.0 * b2)}, {1.0 - a / 2.0, 1.0 / (2.0 * b)}};
    s.prefactor = kPi * kPi / b;
    s.sigma = 0.5 * std::min(b2, a * b);
  } else {
    // G(u/b) G(1 - u/b^2) G(a - b - u/b)
    // / [G(1 + u/b) G(1/2 + u/(2b^2)) G((2-a+b)/2 + u/(2b)) G(1/2 - u/(2b^2)) G((a-b)/2 - u/(2b))]
    s.upper = {{0.0, 1.0 / b2},
               {1.0 - a + b, 1.0 / b},
               {1.0, 1.0 / b},
               {0.5, 1.0 / (2.0 * b2)},
               {(2.0 - a + b) / 2.0, 1.0 / (2.0 * b)}};
    s.lower = {{0.0, 1.0 / b}, {0.5, 1.0 / (2.0 * b2)}, {1.0 - (a - b) / 2.0, 1.0 / (2.0 * b)}};
    s.prefactor = -kPi * kPi / b;
    s.sigma = 0.5 * std::min(b2, b * (a - b));
  }
  validate(s);
  return s;
}

DirectReport direct_oscillatory_I(const ChirpIntegralSpec& c, double k, const DirectOptions& opt) {
  check_chirp(c);
  if (!(k > 0.0)) throw DomainError("direct_oscillatory_I: k must be > 0");
  const double a = c.alpha, b = c.beta;
  const bool i1 = c.which == ChirpIntegral::I1;
  const double expo = i1 ? a - 1.0 : a - b - 1.0;
  const double zero_shift = i1 ? 0.0 : 0.5;  // zeros of S at (n + shift) pi
  auto S = [&](double w) { return opt.zero_integrand ? 0.0 : (i1 ? std::sin(w) : std::cos(w)); };
  auto g = [&](double y) { return std::pow(y, expo) * S(std::pow(k / y, b)) * std::sin(y); };

  // Head: y in (0, y_a], where the chirp phase (k/y)^b dominates; in the
  // variable w = (k/y)^b the lobes sit between consecutive zeros of S.
  const double y_t = 0.5 * std::min(1.0, std::pow(k, b / (1.0 + b)));
  const double w_a = kPi * (std::ceil(std::pow(k / y_t, b) / kPi - zero_shift) + zero_shift);
  const double y_a = k * std::pow(w_a, -1.0 / b);
  auto head_integrand = [&](double w) {
    const double y = k * std::pow(w, -1.0 / b);
    return std::pow(y, expo) * S(w) * std::sin(y) * (k / b) * std::pow(w, -1.0 / b - 1.0);
  };

  // Tail: y >= y_b, past both the phase-dominated region and the last chirp zero.
  const double reach = std::max({1.0, std::pow(k, b / (1.0 + b)), k * std::pow(kPi / 2.0, -1.0 / b)});
  const double y_b = kPi * std::ceil(opt.tail_start_scale * reach / kPi);

  DirectReport r;
  const LobeSum head = alternating_lobes(head_integrand, w_a, opt);
  r.head = head.value;
  r.head_lobes = head.lobes;

  std::vector<double> br{y_a};
  for (double n = std::ceil(y_a / kPi); n * kPi < y_b; n += 1.0) {
    if (n * kPi > y_a) br.push_back(n * kPi);
  }
  const double w_lo = std::pow(k / y_b, b);
  for (double n = std::ceil(w_lo / kPi - zero_shift); (n + zero_shift) * kPi < w_a; n += 1.0) {
    const double w = (n + zero_shift) * kPi;
    if (w > w_lo) br.push_back(k * std::pow(w, -1.0 / b));
  }
  br.push_back(y_b);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  r.middle = quad::integrate(g, br, {1e-14, 1e-13, 2'000'000}).value;

  const LobeSum tail = alternating_lobes(g, y_b, opt);
  r.tail = tail.value;
  r.tail_lobes = tail.lobes;
  r.tail_lobe_magnitudes = tail.magnitudes;
  r.value = r.head + r.middle + r.tail;
  return r;
}

double chirp_integral(const ChirpIntegralSpec& c, double k, Method method, const MbOptions& mb,
                      const DirectOptions& direct) {
  check_chirp(c);
  if (!(k > 0.0)) throw DomainError("chirp_integral: k must be > 0");
  if (method == Method::Direct) return direct_oscillatory_I(c, k, direct).value;
  const HFunctionSpec spec = build_chirp_spec(c);
  double v = mb_integrate(spec, std::pow(k, -1.0 / c.beta), mb).value.real();
  if (c.which == ChirpIntegral::I2) {
    // Residue at u = 0, which lies left of sigma but belongs to the right.
    const double d = c.alpha - c.beta;
    v += specfun::gamma(d) * std::sin(kPi * d / 2.0);
  }
  return v;
}

double chirp_ft(double alpha, double beta, double nu, Method method) {
  if (nu == 0.0 || !std::isfinite(nu)) throw DomainError("chirp_ft: need finite nu != 0");
  const double k = 2.0 * kPi * std::abs(nu);
  const double i1 = chirp_integral({alpha, beta, ChirpIntegral::I1}, k, method);
  const double i2 = chirp_integral({alpha, beta, ChirpIntegral::I2}, k, method);
  return -2.0 * alpha / std::pow(k, 1.0 + alpha) * i1 + 2.0 * beta / std::pow(k, 1.0 + alpha - beta) * i2;
}

std::string_view method_name(Method m) { return m == Method::MB ? "MB" : "Direct"; }

Method method_from_name(std::string_view name) {
  if (name == "MB" || name == "mb") return Method::MB;
  if (name == "Direct" || name == "direct") return Method::Direct;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

}  // namespace frl::mellin
