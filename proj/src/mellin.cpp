#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "frl/mellin.hpp"

namespace frl::mellin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Rightmost pole of the Gamma(b_j + B_j s), j <= m family.
double left_family_max(const HFunctionSpec& s) {
  double x = -kInf;
  for (int j = 0; j < s.m; ++j) x = std::max(x, -s.lower[j].c.real() / s.lower[j].C);
  return x;
}

// Leftmost pole of the Gamma(1 - a_l - A_l s), l <= n family.
double right_family_min(const HFunctionSpec& s) {
  double x = kInf;
  for (int l = 0; l < s.n; ++l) x = std::min(x, (1.0 - s.upper[l].c.real()) / s.upper[l].C);
  return x;
}

cplx pairwise_sum(const cplx* v, std::size_t n) {
  if (n <= 16) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

struct Contour {
  double sigma, lambda, dir;
  cplx at(double t) const {
    return {sigma + dir * lambda * (std::sqrt(1.0 + t * t) - 1.0), t};
  }
  cplx derivative(double t) const { return {dir * lambda * t / std::sqrt(1.0 + t * t), 1.0}; }
};

}  // namespace

void validate(const HFunctionSpec& s) {
  if (s.m < 0 || s.n < 0 || s.m > s.q || s.n > s.p) {
    throw PreconditionError("H-function: need 0 <= m <= q and 0 <= n <= p");
  }
  if (static_cast<int>(s.upper.size()) != s.p || static_cast<int>(s.lower.size()) != s.q) {
    throw PreconditionError("H-function: parameter list lengths do not match (p, q)");
  }
  for (const auto& g : s.upper) {
    if (!(g.C > 0.0)) throw PreconditionError("H-function: A_l must be > 0");
  }
  for (const auto& g : s.lower) {
    if (!(g.C > 0.0)) throw PreconditionError("H-function: B_j must be > 0");
  }
  if (!(left_family_max(s) < s.sigma && s.sigma < right_family_min(s))) {
    throw PreconditionError("H-function: contour abscissa does not separate the pole families");
  }
}

double mu(const HFunctionSpec& s) {
  double b = 0.0, a = 0.0;
  for (const auto& g : s.lower) b += g.C;
  for (const auto& g : s.upper) a += g.C;
  return b - a;
}

double pole_clearance(const HFunctionSpec& s) {
  return std::min(s.sigma - left_family_max(s), right_family_min(s) - s.sigma);
}

cplx log_integrand(const HFunctionSpec& sp, cplx s) {
  cplx acc = 0.0;
  for (int j = 0; j < sp.q; ++j) {
    const auto& g = sp.lower[j];
    if (j < sp.m) acc += log_gamma(g.c + g.C * s);
    else acc -= log_gamma(1.0 - g.c - g.C * s);
  }
  for (int l = 0; l < sp.p; ++l) {
    const auto& g = sp.upper[l];
    if (l < sp.n) acc += log_gamma(1.0 - g.c - g.C * s);
    else acc -= log_gamma(g.c + g.C * s);
  }
  return acc;
}

MbReport mb_integrate(const HFunctionSpec& spec, double z, const MbOptions& opt) {
  validate(spec);
  if (!(z > 0.0)) throw DomainError("mb_integrate: z must be > 0");
  if (!(opt.t_max > 0.0 && opt.step > 0.0)) throw DomainError("mb_integrate: t_max, step must be > 0");

  const double m = mu(spec);
  // Bend: below the scale t* the phase of Hs z^-s is still slow; the bend
  // slope lambda is chosen so that the extra decay kicks in past t*.
  double K = -std::log(z);
  for (const auto& g : spec.lower) K += g.C * std::log(g.C);
  for (const auto& g : spec.upper) K -= g.C * std::log(g.C);
  double lambda = 0.0;
  if (m != 0.0) {
    const double t_star = std::exp(std::clamp(-K / m, -50.0, 50.0));
    lambda = std::min(0.5, 3.0 / (std::abs(m) * t_star));
  }
  const Contour path{spec.sigma, lambda, m < 0.0 ? 1.0 : -1.0};
  const double step = std::min(opt.step, pole_clearance(spec) / 6.0);
  const double log_z = std::log(z);

  double t_max = opt.t_max;
  for (int attempt = 0;; ++attempt) {
    const auto half = static_cast<std::size_t>(std::ceil(t_max / step));
    const std::size_t nodes = 2 * half + 1;
    std::vector<cplx> f(nodes);
    std::vector<double> mag(nodes);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nodes); ++i) {
      const double t = step * (static_cast<double>(i) - static_cast<double>(half));
      const cplx s = path.at(t);
      const cplx v = std::exp(log_integrand(spec, s) - s * log_z) * path.derivative(t);
      f[i] = v;
      mag[i] = std::abs(v);
    }
    const double peak = *std::max_element(mag.begin(), mag.end());
    const double end = std::max(mag.front(), mag.back());
    if (!std::isfinite(peak)) throw ConvergenceError("mb_integrate: integrand overflow on the contour");
    if (end > opt.decay_tol * std::max(peak, 1e-300)) {
      if (attempt < opt.max_extensions) {
        t_max *= 2.0;
        continue;
      }
      throw ConvergenceError("mb_integrate: integrand does not decay along the contour (|end|/peak = " +
                             std::to_string(end / peak) + ")");
    }
    // Ends are negligible, so the trapezoid weights are all `step`.
    const cplx scale = spec.prefactor * step / cplx(0.0, 2.0 * std::numbers::pi);
    const cplx fine = pairwise_sum(f.data(), nodes) * scale;
    std::vector<cplx> even;
    even.reserve(half + 1);
    for (std::size_t i = half % 2; i < nodes; i += 2) even.push_back(f[i]);
    const cplx coarse = pairwise_sum(even.data(), even.size()) * (2.0 * scale);

    MbReport r;
    r.value = fine;
    r.coarse_delta = std::abs(fine - coarse);
    r.step = step;
    r.t_max = t_max;
    r.lambda = lambda;
    r.nodes = nodes;
    r.end_magnitude = end;
    r.peak_magnitude = peak;
    return r;
  }
}

double h_asymptotic_exponent(const HFunctionSpec& s) {
  validate(s);
  if (mu(s) > 1e-12) throw PreconditionError("h_asymptotic_exponent: needs sum B - sum A <= 0");
  // Poles (1 - a_l + v) / A_l for v = 0, 1, ... must be distinct across l <= n.
  constexpr int kBound = 10000;
  for (int l1 = 0; l1 < s.n; ++l1) {
    for (int l2 = l1 + 1; l2 < s.n; ++l2) {
      const auto& g1 = s.upper[l1];
      const auto& g2 = s.upper[l2];
      for (int v1 = 0; v1 <= kBound; ++v1) {
        const double pole = (1.0 - g1.c.real() + v1) / g1.C;
        const double v2 = pole * g2.C - (1.0 - g2.c.real());
        const double r = std::round(v2);
        if (r >= 0.0 && std::abs(v2 - r) < 1e-9 * std::max(1.0, std::abs(v2))) {
          throw PreconditionError("h_asymptotic_exponent: poles of the right family coincide");
        }
      }
    }
  }
  double rho = -kInf;
  for (int l = 0; l < s.n; ++l) rho = std::max(rho, (s.upper[l].c.real() - 1.0) / s.upper[l].C);
  return rho;
}

namespace {

nlohmann::json cjson(cplx c) { return nlohmann::json::array({c.real(), c.imag()}); }

cplx from_cjson(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::json params_json(const std::vector<GammaParam>& v, const char* small, const char* big) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : v) a.push_back({{small, cjson(g.c)}, {big, g.C}});
  return a;
}

std::vector<GammaParam> params_from(const nlohmann::json& a, const char* small, const char* big) {
  std::vector<GammaParam> v;
  for (const auto& e : a) v.push_back({from_cjson(e.at(small)), e.at(big).get<double>()});
  return v;
}

}  // namespace

void to_json(nlohmann::json& j, const HFunctionSpec& s) {
  j = nlohmann::json{{"orders", {{"m", s.m}, {"n", s.n}, {"p", s.p}, {"q", s.q}}},
                     {"upper", params_json(s.upper, "a", "A")},
                     {"lower", params_json(s.lower, "b", "B")},
                     {"prefactor", cjson(s.prefactor)},
                     {"sigma", s.sigma},
                     {"sum_B_minus_sum_A", mu(s)}};
}

void from_json(const nlohmann::json& j, HFunctionSpec& s) {
  const auto& o = j.at("orders");
  s.m = o.at("m").get<int>();
  s.n = o.at("n").get<int>();
  s.p = o.at("p").get<int>();
  s.q = o.at("q").get<int>();
  s.upper = params_from(j.at("upper"), "a", "A");
  s.lower = params_from(j.at("lower"), "b", "B");
  s.prefactor = j.contains("prefactor") ? from_cjson(j.at("prefactor")) : cplx(1.0);
  s.sigma = j.at("sigma").get<double>();
  validate(s);
}

void to_json(nlohmann::json& j, const MbReport& r) {
  j = nlohmann::json{{"value", cjson(r.value)},  {"coarse_delta", r.coarse_delta},
                     {"step", r.step},           {"t_max", r.t_max},
                     {"lambda", r.lambda},       {"nodes", r.nodes},
                     {"end_magnitude", r.end_magnitude}, {"peak_magnitude", r.peak_magnitude}};
}

}  // namespace frl::mellin
