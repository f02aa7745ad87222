#include "frl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>

#include "frl/error.hpp"
#include "frl/kernels.hpp"
#include "frl/quadrature.hpp"

namespace frl::spectral {

namespace {

std::vector<double> grid(double L, std::size_t N) {
  std::vector<double> t(N);
  for (std::size_t n = 0; n < N; ++n) {
    t[n] = -L + 2.0 * L * static_cast<double>(n) / static_cast<double>(N);
  }
  return t;
}

}  // namespace

SampledSignal sample(const catalog::AnalyticFunction& f, std::size_t N) {
  if (N < 2) throw DomainError("sample: need N >= 2");
  const auto t = grid(f.half_width, N);
  SampledSignal s;
  s.samples.resize(N);
  s.period = 2.0 * f.half_width;
  kernels::omp::evaluate(f.eval, t, s.samples);
  return s;
}

SampledSignal sample(const catalog::FunctionDescriptor& d, std::size_t N) {
  SampledSignal s = sample(catalog::as_function(d), N);
  s.descriptor = d;
  return s;
}

Spectrum dft(std::span<const cplx> x, double period) {
  Spectrum out;
  out.period = period;
  out.coeffs.assign(x.begin(), x.end());
  if (out.coeffs.empty()) return out;
  FftPlan plan(out.coeffs.size());
  plan.forward(out.coeffs);
  const double scale = 1.0 / static_cast<double>(out.coeffs.size());
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

Spectrum dft(const SampledSignal& s) {
  std::vector<cplx> x(s.samples.begin(), s.samples.end());
  return dft(x, s.period);
}

std::vector<cplx> inverse_dft(const Spectrum& spec) {
  std::vector<cplx> x = spec.coeffs;
  if (x.empty()) return x;
  FftPlan plan(x.size());
  plan.inverse(x);
  return x;
}

std::vector<cplx> naive_dft(std::span<const cplx> x) {
  const std::size_t N = x.size();
  std::vector<cplx> out(N);
  for (std::size_t k = 0; k < N; ++k) {
    cplx acc = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      // reduce k n mod N in integers so the angle stays small
      const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * n) % N) /
                         static_cast<double>(N);
      acc += x[n] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc / static_cast<double>(N);
  }
  return out;
}

cplx coefficient(const Spectrum& spec, long k) {
  const long N = static_cast<long>(spec.size());
  if (2 * std::abs(k) >= N) {
    throw RangeError("coefficient: |k| = " + std::to_string(std::abs(k)) +
                     " is in the aliased range (N = " + std::to_string(N) + ")");
  }
  return spec.coeffs[static_cast<std::size_t>(k >= 0 ? k : N + k)];
}

cplx centered_coefficient(const Spectrum& spec, long k) {
  const cplx c = coefficient(spec, k);
  return k % 2 == 0 ? c : -c;
}

double tail_sum(const Spectrum& spec, long Nc, int m, int power) {
  const long N = static_cast<long>(spec.size());
  if (Nc < 0 || 2 * Nc >= N) throw RangeError("tail_sum: need 0 <= Nc < N/2");
  if (m < 0) throw DomainError("tail_sum: m must be >= 0");
  if (power != 1 && power != 2) throw DomainError("tail_sum: power must be 1 or 2");
  double sum = 0.0;
  for (long k = Nc + 1; 2 * k < N; ++k) {
    const double w = std::pow(static_cast<double>(k), m);
    const double a = std::abs(coefficient(spec, k));
    const double b = std::abs(coefficient(spec, -k));
    sum += power == 1 ? w * (a + b) : w * (a * a + b * b);
  }
  return power == 2 ? std::sqrt(sum) : sum;
}

cplx ft_numeric(const catalog::FunctionDescriptor& d, double nu, double W, const FtOptions& opt) {
  using catalog::Kind;
  if (d.kind() == Kind::Weierstrass || d.kind() == Kind::CantorLebesgue) {
    throw PreconditionError("ft_numeric: " + std::string(catalog::kind_name(d.kind())) +
                            " has no Fourier transform on the line");
  }
  if (!(W > 0.0)) throw DomainError("ft_numeric: window half width must be > 0");
  catalog::FunctionDescriptor line = d;
  line.half_width = std::max(d.half_width, W);
  if (d.kind() == Kind::ExpAbs || d.kind() == Kind::GaussPower) {
    if (std::abs(catalog::evaluate(line, W)) >= 1e-10) {
      throw PreconditionError("ft_numeric: |f| >= 1e-10 at the window edge; widen the window");
    }
  }
  // Every catalog kind accepted here is even, so the transform is real:
  // 2 * integral_0^W f(t) cos(2 pi nu t) dt.
  const double w = 2.0 * std::numbers::pi * nu;
  auto integrand = [&](double t) { return catalog::evaluate(line, t) * std::cos(w * t); };

  std::vector<double> br{0.0};
  if (const auto* c = std::get_if<catalog::Chirp>(&d.params)) {
    // sine zeros of the chirp, ascending in t
    std::vector<double> zeros;
    for (int n = 2000; n >= 1; --n) {
      const double z = std::pow(n * std::numbers::pi, -1.0 / c->beta);
      if (z < W) zeros.push_back(z);
    }
    br.insert(br.end(), zeros.begin(), zeros.end());
  }
  if (nu != 0.0) {
    const double half = 0.5 / std::abs(nu);
    const std::size_t count = static_cast<std::size_t>(std::min(W / half, 2e5));
    const double step = W / static_cast<double>(std::max<std::size_t>(count, 1));
    for (std::size_t i = 1; i < count; ++i) br.push_back(step * static_cast<double>(i));
  }
  br.push_back(W);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());

  const auto r = quad::integrate(integrand, br, {opt.abs_tol, opt.rel_tol, opt.max_panels});
  return {2.0 * r.value, 0.0};
}

void write_signal_csv(std::ostream& os, const SampledSignal& s) {
  os << "t,f\n" << std::setprecision(17);
  for (std::size_t n = 0; n < s.size(); ++n) os << s.t(n) << ',' << s.samples[n] << '\n';
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spec, std::size_t kmax) {
  std::size_t top = (spec.size() + 1) / 2;
  if (kmax != 0) top = std::min(top, kmax);
  os << "k,re,im,abs\n" << std::setprecision(17);
  for (std::size_t k = 0; k < top; ++k) {
    const cplx c = spec.coeffs[k];
    os << k << ',' << c.real() << ',' << c.imag() << ',' << std::abs(c) << '\n';
  }
}

}  // namespace frl::spectral
