#include "frl/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>

#include "frl/error.hpp"
#include "frl/kernels.hpp"

namespace frl::est {

namespace {

DecayEstimate from_points(std::vector<double> ks, std::vector<double> amps, SlopeMethod m) {
  std::vector<double> x(ks.size()), y(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!(amps[i] > 0.0)) throw DomainError("decay slope: zero coefficient at k = " + std::to_string(ks[i]));
    x[i] = std::log(ks[i]);
    y[i] = std::log(amps[i]);
  }
  const LineFit fit = fit_line(x, y);
  DecayEstimate e;
  e.slope = fit.slope;
  e.intercept = fit.intercept;
  e.residual = fit.rms;
  e.method = m;
  e.k_min = static_cast<long>(*std::min_element(ks.begin(), ks.end()));
  e.k_max = static_cast<long>(*std::max_element(ks.begin(), ks.end()));
  e.k = std::move(ks);
  e.amp = std::move(amps);
  return e;
}

std::vector<double> uniform(double a, double b, std::size_t n) {
  std::vector<double> t(n);
  const double step = n > 1 ? (b - a) / static_cast<double>(n - 1) : 0.0;
  for (std::size_t i = 0; i < n; ++i) t[i] = a + step * static_cast<double>(i);
  return t;
}

// Turning points of a sequence, ignoring moves smaller than eps.
std::size_t count_turns(std::span<const double> g, double eps) {
  if (g.empty()) return 0;
  std::size_t turns = 0;
  int dir = 0;
  double ext = g[0];
  for (double x : g.subspan(1)) {
    if (dir == 0) {
      if (x > ext + eps) dir = 1, ext = x;
      else if (x < ext - eps) dir = -1, ext = x;
    } else if (dir > 0) {
      if (x > ext) ext = x;
      else if (x < ext - eps) ++turns, dir = -1, ext = x;
    } else {
      if (x < ext) ext = x;
      else if (x > ext + eps) ++turns, dir = 1, ext = x;
    }
  }
  return turns;
}

}  // namespace

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw DomainError("fit_line: need >= 2 paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) mx += x[i], my += y[i];
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_line: abscissae are all equal");
  const double slope = sxy / sxx;
  const double icpt = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (slope * x[i] + icpt);
    ss += r * r;
  }
  return {slope, icpt, std::sqrt(ss / static_cast<double>(n))};
}

DecayEstimate decay_slope_two_point(const spectral::Spectrum& spec, long k1, long k2) {
  if (!(0 < k1 && k1 < k2)) throw DomainError("decay_slope_two_point: need 0 < k1 < k2");
  const double a1 = std::abs(spectral::coefficient(spec, k1));
  const double a2 = std::abs(spectral::coefficient(spec, k2));
  if (a1 == 0.0 || a2 == 0.0) throw DomainError("decay_slope_two_point: zero coefficient");
  // Same arithmetic as a hand computation from two read-off values.
  DecayEstimate e;
  e.slope = (std::log(a1) - std::log(a2)) / (std::log(double(k1)) - std::log(double(k2)));
  e.intercept = std::log(a1) - e.slope * std::log(double(k1));
  e.method = SlopeMethod::TwoPoint;
  e.k_min = k1;
  e.k_max = k2;
  e.residual = 0.0;
  e.k = {double(k1), double(k2)};
  e.amp = {a1, a2};
  return e;
}

DecayEstimate decay_slope_envelope(const spectral::Spectrum& spec, long k_min, long k_max,
                                   int bpd) {
  const long N = static_cast<long>(spec.size());
  if (k_min < 1 || k_max <= k_min || 2 * k_max >= N) {
    throw RangeError("decay_slope_envelope: need 1 <= k_min < k_max < N/2");
  }
  if (bpd < 1) throw DomainError("decay_slope_envelope: bins_per_decade must be >= 1");
  const double lo = std::log10(double(k_min));
  const double hi = std::log10(double(k_max + 1));
  const int nbins = static_cast<int>(std::ceil(bpd * (hi - lo)));
  std::vector<double> ks, amps;
  long k = k_min;
  for (int b = 0; b < nbins && k <= k_max; ++b) {
    const double edge = b + 1 == nbins ? double(k_max + 1) : std::pow(10.0, lo + (hi - lo) * (b + 1) / nbins);
    long best_k = -1;
    double best = -1.0;
    for (; k <= k_max && double(k) < edge; ++k) {
      const double a = std::abs(spec.coeffs[static_cast<std::size_t>(k)]);
      if (a > best) best = a, best_k = k;
    }
    if (best_k > 0) {
      ks.push_back(double(best_k));
      amps.push_back(best);
    }
  }
  if (ks.size() < 3) {
    throw PreconditionError("decay_slope_envelope: fewer than 3 non-empty bins in [k_min, k_max]");
  }
  return from_points(std::move(ks), std::move(amps), SlopeMethod::EnvelopeLSQ);
}

DecayEstimate decay_slope_envelope(const spectral::Spectrum& spec) {
  return decay_slope_envelope(spec, 16, static_cast<long>(spec.size()) / 4);
}

DecayEstimate decay_slope_points(const spectral::Spectrum& spec, std::span<const long> ks) {
  if (ks.size() < 2) throw DomainError("decay_slope_points: need >= 2 indices");
  std::vector<double> x, a;
  for (long k : ks) {
    if (k <= 0) throw DomainError("decay_slope_points: indices must be positive");
    x.push_back(double(k));
    a.push_back(std::abs(spectral::coefficient(spec, k)));
  }
  return from_points(std::move(x), std::move(a), SlopeMethod::PointsLSQ);
}

std::vector<double> default_h_grid() {
  std::vector<double> h;
  for (int j = 4; j <= 18; ++j) h.push_back(std::ldexp(1.0, -j));
  return h;
}

HolderEstimate holder_estimate(const catalog::AnalyticFunction& f, std::span<const double> h_grid,
                               std::size_t t_samples, std::uint64_t jitter_seed) {
  const double L = f.half_width;
  if (h_grid.size() < 4) throw DomainError("holder_estimate: need at least 4 h values");
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    if (!(h_grid[i] > 0.0 && h_grid[i] < L)) throw DomainError("holder_estimate: h outside (0, L)");
    if (i > 0 && !(h_grid[i] < h_grid[i - 1])) throw DomainError("holder_estimate: h grid must decrease");
  }
  if (t_samples < 1000) throw DomainError("holder_estimate: need t_samples >= 1000");

  HolderEstimate e;
  e.h_grid.assign(h_grid.begin(), h_grid.end());
  for (double h : h_grid) {
    const double hi = L - h;
    std::vector<double> t = uniform(-L, hi, t_samples);
    if (jitter_seed != 0) {
      std::mt19937_64 rng(jitter_seed);
      const double shift = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * (hi + L) /
                           static_cast<double>(t_samples - 1);
      for (double& x : t) x += shift;
    }
    // The sup for these functions sits at or next to a singular point, on a
    // scale between h and sqrt(h); refine there.
    for (double s : f.singular_points) {
      const double r = std::sqrt(h);
      const double step = h / 8.0;
      for (double x : {s, s - h}) t.push_back(x);
      for (double x = s - r; x <= s + r; x += step) t.push_back(x);
    }
    std::erase_if(t, [&](double x) { return x < -L || x > hi; });
    e.sup_moduli.push_back(kernels::omp::sup_abs_difference(f.eval, t, h));
  }
  std::vector<double> x, y;
  for (std::size_t i = 0; i < h_grid.size(); ++i) {
    if (!(e.sup_moduli[i] > 0.0)) throw DomainError("holder_estimate: zero modulus (constant function)");
    x.push_back(std::log(h_grid[i]));
    y.push_back(std::log(e.sup_moduli[i]));
  }
  const LineFit fit = fit_line(x, y);
  e.mu_hat = fit.slope;
  e.intercept = fit.intercept;
  e.fit_residual = fit.rms;
  return e;
}

HolderEstimate holder_estimate(const catalog::FunctionDescriptor& d, std::span<const double> h_grid,
                               std::size_t t_samples, std::uint64_t jitter_seed) {
  return holder_estimate(catalog::as_function(d), h_grid, t_samples, jitter_seed);
}

std::size_t count_oscillations(const catalog::AnalyticFunction& f, double h, std::size_t t_grid_size) {
  const double L = f.half_width;
  if (!(h > 0.0 && h < 2.0 * L)) throw DomainError("count_oscillations: need 0 < h < 2L");
  if (t_grid_size < 10'000) throw DomainError("count_oscillations: need t_grid_size >= 1e4");
  // Grid step h/m so that t + h is itself a grid node.
  const auto m = static_cast<std::size_t>(
      std::max(10.0, std::ceil(h * static_cast<double>(t_grid_size) / (2.0 * L))));
  const double delta = h / static_cast<double>(m);
  const auto n = static_cast<std::size_t>(std::floor(2.0 * L / delta + 1e-9)) + 1;
  std::vector<double> t(n), v(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = std::min(L, -L + delta * static_cast<double>(i));
  kernels::omp::evaluate(f.eval, t, v);
  double fmax = 0.0;
  for (double x : v) fmax = std::max(fmax, std::abs(x));
  const std::size_t len = n - m;
  std::vector<double> g(len);
  for (std::size_t i = 0; i < len; ++i) g[i] = v[i + m] - v[i];
  return count_turns(g, 1e-12 * fmax);
}

std::size_t count_oscillations(const catalog::FunctionDescriptor& d, double h, std::size_t t_grid_size) {
  return count_oscillations(catalog::as_function(d), h, t_grid_size);
}

OscillationProfile oscillation_profile(const catalog::AnalyticFunction& f,
                                       std::span<const double> h_grid, std::size_t t_grid_size) {
  for (std::size_t i = 1; i < h_grid.size(); ++i) {
    if (!(h_grid[i] < h_grid[i - 1])) throw DomainError("oscillation_profile: h grid must decrease");
  }
  OscillationProfile p;
  p.h_grid.assign(h_grid.begin(), h_grid.end());
  for (double h : h_grid) p.extrema_counts.push_back(count_oscillations(f, h, t_grid_size));
  const auto& c = p.extrema_counts;
  p.uniformly_bounded = c.size() >= 3 && c[c.size() - 1] == c[c.size() - 2] &&
                        c[c.size() - 2] == c[c.size() - 3];
  return p;
}

OscillationProfile oscillation_profile(const catalog::FunctionDescriptor& d,
                                       std::span<const double> h_grid, std::size_t t_grid_size) {
  return oscillation_profile(catalog::as_function(d), h_grid, t_grid_size);
}

std::vector<std::size_t> default_tv_grids() {
  std::vector<std::size_t> g;
  for (int p = 8; p <= 22; ++p) g.push_back(std::size_t{1} << p);
  return g;
}

TVEstimate total_variation(const catalog::AnalyticFunction& f, std::span<const std::size_t> grids) {
  if (grids.empty()) throw DomainError("total_variation: empty grid list");
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (grids[i] < 1) throw DomainError("total_variation: grid sizes must be >= 1");
    if (i > 0 && grids[i] != 2 * grids[i - 1]) {
      throw PreconditionError("total_variation: grids must be nested dyadic refinements");
    }
  }
  const double L = f.half_width;
  const std::size_t finest = grids.back();
  std::vector<double> t(finest + 1), v(finest + 1);
  for (std::size_t i = 0; i <= finest; ++i) {
    t[i] = -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(finest);
  }
  kernels::omp::evaluate(f.eval, t, v);

  TVEstimate e;
  e.grid_sizes.assign(grids.begin(), grids.end());
  for (std::size_t n : grids) e.tv_values.push_back(kernels::omp::abs_increment_sum(v, finest / n));

  const std::size_t levels = e.tv_values.size();
  if (levels < 2) return e;
  const std::size_t w = (levels - 1) / 2;
  const double tv = e.tv_values.back();
  if (w == 0) {
    e.growth_ratio = tv / e.tv_values[levels - 2];
    e.diverging = e.growth_ratio > 1.1;
    return e;
  }
  const double last = tv - e.tv_values[levels - 1 - w];
  const double prev = e.tv_values[levels - 1 - w] - e.tv_values[levels - 1 - 2 * w];
  if (last <= 1e-12 * tv) {
    e.growth_ratio = 0.0;
  } else if (prev <= 1e-12 * tv) {
    e.growth_ratio = std::numeric_limits<double>::infinity();
  } else {
    e.growth_ratio = last / prev;
  }
  e.diverging = e.growth_ratio > 1.1;
  return e;
}

TVEstimate total_variation(const catalog::FunctionDescriptor& d, std::span<const std::size_t> grids) {
  return total_variation(catalog::as_function(d), grids);
}

std::string_view method_name(SlopeMethod m) {
  switch (m) {
    case SlopeMethod::TwoPoint: return "TwoPoint";
    case SlopeMethod::EnvelopeLSQ: return "EnvelopeLSQ";
    case SlopeMethod::PointsLSQ: return "PointsLSQ";
  }
  return "?";
}

void to_json(nlohmann::json& j, const DecayEstimate& e) {
  j = nlohmann::json{{"method", method_name(e.method)},
                     {"slope", e.slope},
                     {"intercept", e.intercept},
                     {"k_range", {e.k_min, e.k_max}},
                     {"residual", e.residual},
                     {"points", e.k.size()}};
}

void to_json(nlohmann::json& j, const HolderEstimate& e) {
  j = nlohmann::json{{"mu_hat", e.mu_hat},
                     {"intercept", e.intercept},
                     {"h_grid", e.h_grid},
                     {"sup_moduli", e.sup_moduli},
                     {"fit_residual", e.fit_residual}};
}

void to_json(nlohmann::json& j, const OscillationProfile& p) {
  j = nlohmann::json{{"h_grid", p.h_grid},
                     {"extrema_counts", p.extrema_counts},
                     {"uniformly_bounded_verdict", p.uniformly_bounded}};
}

void to_json(nlohmann::json& j, const TVEstimate& e) {
  j = nlohmann::json{{"grid_sizes", e.grid_sizes},
                     {"tv_values", e.tv_values},
                     {"growth_ratio", std::isfinite(e.growth_ratio) ? nlohmann::json(e.growth_ratio)
                                                                     : nlohmann::json("inf")},
                     {"diverging_verdict", e.diverging}};
}

void write_holder_csv(std::ostream& os, const HolderEstimate& e) {
  os << "h,sup_abs_diff\n" << std::setprecision(17);
  for (std::size_t i = 0; i < e.h_grid.size(); ++i) os << e.h_grid[i] << ',' << e.sup_moduli[i] << '\n';
}

void write_profile_csv(std::ostream& os, const OscillationProfile& p) {
  os << "h,extrema\n" << std::setprecision(17);
  for (std::size_t i = 0; i < p.h_grid.size(); ++i) os << p.h_grid[i] << ',' << p.extrema_counts[i] << '\n';
}

}  // namespace frl::est
