#pragma once

// Empirical regularity measurements: spectral decay slopes, uniform Hoelder
// exponent, extrema counts of the forward difference, and total variation.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frl/catalog.hpp"
#include "frl/spectral.hpp"

namespace frl::est {

enum class SlopeMethod { TwoPoint, EnvelopeLSQ, PointsLSQ };

struct DecayEstimate {
  double slope = 0.0;
  double intercept = 0.0;  // natural-log intercept
  SlopeMethod method = SlopeMethod::TwoPoint;
  long k_min = 0;
  long k_max = 0;
  double residual = 0.0;
  std::vector<double> k;    // fit abscissae
  std::vector<double> amp;  // fit ordinates |c_k|
};

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

/// Ordinary least squares y = slope x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

DecayEstimate decay_slope_two_point(const spectral::Spectrum& spec, long k1, long k2);

inline constexpr int kDefaultBinsPerDecade = 8;

/// Max |c_k| per log-uniform bin over [k_min, k_max], then a log-log LSQ line.
DecayEstimate decay_slope_envelope(const spectral::Spectrum& spec, long k_min, long k_max,
                                   int bins_per_decade = kDefaultBinsPerDecade);
/// Envelope fit with the default range [16, N/4].
DecayEstimate decay_slope_envelope(const spectral::Spectrum& spec);

/// log-log LSQ through the given (k, |c_k|) pairs, e.g. a lacunary sequence.
DecayEstimate decay_slope_points(const spectral::Spectrum& spec, std::span<const long> ks);

struct HolderEstimate {
  double mu_hat = 0.0;
  double intercept = 0.0;
  std::vector<double> h_grid;
  std::vector<double> sup_moduli;
  double fit_residual = 0.0;
};

/// h_j = 2^-j for j = 4..18.
std::vector<double> default_h_grid();

inline constexpr std::size_t kDefaultHolderSamples = 100'000;

/// sup_t |f(t+h) - f(t)| per h over a uniform grid refined around the
/// singular points; mu_hat is the slope of log sup against log h. A nonzero
/// seed shifts the uniform part of the grid by a random fraction of a step.
HolderEstimate holder_estimate(const catalog::AnalyticFunction& f, std::span<const double> h_grid,
                               std::size_t t_samples = kDefaultHolderSamples,
                               std::uint64_t jitter_seed = 0);
HolderEstimate holder_estimate(const catalog::FunctionDescriptor& d, std::span<const double> h_grid,
                               std::size_t t_samples = kDefaultHolderSamples,
                               std::uint64_t jitter_seed = 0);

inline constexpr std::size_t kDefaultOscillationGrid = 10'000;

/// Local extrema of g(t) = f(t+h) - f(t) on t in [-L, L-h]. Moves smaller
/// than 1e-12 max|f| never complete an extremum.
std::size_t count_oscillations(const catalog::AnalyticFunction& f, double h,
                               std::size_t t_grid_size = kDefaultOscillationGrid);
std::size_t count_oscillations(const catalog::FunctionDescriptor& d, double h,
                               std::size_t t_grid_size = kDefaultOscillationGrid);

struct OscillationProfile {
  std::vector<double> h_grid;
  std::vector<std::size_t> extrema_counts;
  bool uniformly_bounded = false;
};

OscillationProfile oscillation_profile(const catalog::AnalyticFunction& f,
                                       std::span<const double> h_grid,
                                       std::size_t t_grid_size = kDefaultOscillationGrid);
OscillationProfile oscillation_profile(const catalog::FunctionDescriptor& d,
                                       std::span<const double> h_grid,
                                       std::size_t t_grid_size = kDefaultOscillationGrid);

struct TVEstimate {
  std::vector<std::size_t> grid_sizes;
  std::vector<double> tv_values;
  double growth_ratio = 0.0;
  bool diverging = false;
};

/// 2^8 .. 2^22 intervals.
std::vector<std::size_t> default_tv_grids();

/// Variation over nested uniform partitions of [-L, L] into n intervals.
/// Diverging when the summed TV increments over the last w refinements exceed
/// those over the w before by more than 10%, w = floor((levels-1)/2).
TVEstimate total_variation(const catalog::AnalyticFunction& f, std::span<const std::size_t> grids);
TVEstimate total_variation(const catalog::FunctionDescriptor& d,
                           std::span<const std::size_t> grids);

std::string_view method_name(SlopeMethod m);

void to_json(nlohmann::json& j, const DecayEstimate& e);
void to_json(nlohmann::json& j, const HolderEstimate& e);
void to_json(nlohmann::json& j, const OscillationProfile& p);
void to_json(nlohmann::json& j, const TVEstimate& e);

void write_holder_csv(std::ostream& os, const HolderEstimate& e);
void write_profile_csv(std::ostream& os, const OscillationProfile& p);

}  // namespace frl::est
