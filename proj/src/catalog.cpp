#include "frl/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "frl/error.hpp"
#include "frl/theory.hpp"

namespace frl::catalog {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr std::string_view kNames[] = {"chirp",  "powerabs", "weierstrass",
                                       "cantor", "expabs",   "gausspower"};

double chirp_value(const Chirp& c, double ax) {
  if (ax == 0.0) return 0.0;
  if (ax < 1e-4) {
    // 1/x^beta is large here; compute the phase and its reduction in extended
    // precision so that the sine keeps full double accuracy.
    const long double w = std::pow(static_cast<long double>(ax), -static_cast<long double>(c.beta));
    return std::pow(ax, c.alpha) * static_cast<double>(std::sin(w));
  }
  return std::pow(ax, c.alpha) * std::sin(std::pow(ax, -c.beta));
}

double weierstrass_value(const Weierstrass& w, double x) {
  // sum_{k>=1} b^{-k mu} cos(b^k pi x); the phase b^k x is tracked mod 2.
  const long double b = w.b;
  long double phase = std::fmod(static_cast<long double>(x), 2.0L);
  const double ratio = std::pow(static_cast<double>(w.b), -w.mu);
  double amplitude = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 4096; ++k) {
    amplitude *= ratio;
    if (amplitude < 1e-15) break;
    phase = std::fmod(phase * b, 2.0L);
    sum += amplitude * std::cos(std::numbers::pi * static_cast<double>(phase));
  }
  return sum;
}

double cantor_value(const CantorLebesgue& c, double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double result = 0.0;
  double scale = 0.5;
  for (int i = 0; i < c.depth; ++i) {
    u *= 3.0;
    const double digit = std::floor(u);
    u -= digit;
    if (digit == 1.0) return result + scale;
    if (digit >= 2.0) result += scale;
    scale *= 0.5;
  }
  return result;
}

}  // namespace

FunctionDescriptor chirp(double alpha, double beta, double L) {
  FunctionDescriptor d{Chirp{alpha, beta}, L};
  validate(d);
  return d;
}
FunctionDescriptor power_abs(double mu, double L) {
  FunctionDescriptor d{PowerAbs{mu}, L};
  validate(d);
  return d;
}
FunctionDescriptor weierstrass(double mu, int b, double L) {
  FunctionDescriptor d{Weierstrass{b, mu}, L};
  validate(d);
  return d;
}
FunctionDescriptor cantor_lebesgue(int depth, double L) {
  FunctionDescriptor d{CantorLebesgue{depth}, L};
  validate(d);
  return d;
}
FunctionDescriptor exp_abs(double a, double L) {
  FunctionDescriptor d{ExpAbs{a}, L};
  validate(d);
  return d;
}
FunctionDescriptor gauss_power(double mu, double L) {
  FunctionDescriptor d{GaussPower{mu}, L};
  validate(d);
  return d;
}

void validate(const FunctionDescriptor& d) {
  if (!(d.half_width > 0.0) || !std::isfinite(d.half_width)) {
    throw DomainError("descriptor: half width L must be positive");
  }
  auto unit_mu = [](double mu, const char* who) {
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError(std::string(who) + ": need 0 < mu < 1");
  };
  std::visit(overloaded{
                 [](const Chirp& c) {
                   if (!(c.alpha > 0.0 && c.beta > 0.0)) {
                     throw DomainError("chirp: need alpha > 0 and beta > 0");
                   }
                 },
                 [&](const PowerAbs& p) { unit_mu(p.mu, "powerabs"); },
                 [&](const Weierstrass& w) {
                   unit_mu(w.mu, "weierstrass");
                   if (w.b < 2) throw DomainError("weierstrass: need integer b >= 2");
                 },
                 [](const CantorLebesgue& c) {
                   if (c.depth < 1) throw DomainError("cantor: depth must be >= 1");
                 },
                 [](const ExpAbs& e) {
                   if (!(e.a > 0.0)) throw DomainError("expabs: need a > 0");
                 },
                 [&](const GaussPower& g) { unit_mu(g.mu, "gausspower"); },
             },
             d.params);
}

std::string_view kind_name(Kind k) { return kNames[static_cast<std::size_t>(k)]; }

Kind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kNames); ++i) {
    if (kNames[i] == name) return static_cast<Kind>(i);
  }
  if (name == "cantorlebesgue") return Kind::CantorLebesgue;
  throw DomainError("unknown function kind '" + std::string(name) + "'");
}

std::string describe(const FunctionDescriptor& d) {
  std::ostringstream os;
  os << kind_name(d.kind()) << '(';
  std::visit(overloaded{
                 [&](const Chirp& c) { os << c.alpha << ',' << c.beta; },
                 [&](const PowerAbs& p) { os << p.mu; },
                 [&](const Weierstrass& w) { os << "b=" << w.b << ",mu=" << w.mu; },
                 [&](const CantorLebesgue& c) { os << "depth=" << c.depth; },
                 [&](const ExpAbs& e) { os << e.a; },
                 [&](const GaussPower& g) { os << g.mu; },
             },
             d.params);
  os << ')';
  return os.str();
}

double evaluate(const FunctionDescriptor& d, double x) {
  const double L = d.half_width;
  if (!(std::abs(x) <= L * (1.0 + 1e-12))) {
    throw DomainError("evaluate: x outside [-L, L]");
  }
  const double ax = std::abs(x);
  return std::visit(
      overloaded{
          [&](const Chirp& c) { return chirp_value(c, ax); },
          [&](const PowerAbs& p) { return std::pow(ax, p.mu); },
          [&](const Weierstrass& w) { return weierstrass_value(w, x); },
          [&](const CantorLebesgue& c) { return cantor_value(c, ax / L); },
          [&](const ExpAbs& e) { return std::exp(-e.a * ax); },
          [&](const GaussPower& g) { return std::exp(-std::numbers::pi * x * x) * std::pow(ax, g.mu); },
      },
      d.params);
}

std::vector<double> singular_points(const FunctionDescriptor&) { return {0.0}; }

RegularityMetadata metadata(const FunctionDescriptor& d) {
  return std::visit(
      overloaded{
          [](const Chirp& c) {
            RegularityMetadata m{};
            m.holder_exponent_bound = std::min(1.0, c.alpha / (1.0 + c.beta));
            m.is_ac = m.is_bv = c.alpha > c.beta;
            m.finite_oscillations = false;
            if (m.is_ac) {
              try {
                m.decay_exponent_predicted =
                    theory::predict_chirp_decay(c.alpha, c.beta, theory::DecayMode::Series)
                        .decay_exponent;
              } catch (const theory::PoleCoincidenceError&) {
                m.decay_note = "undetermined: Gamma poles coincide";
              }
            } else {
              m.decay_note = "no rate derived for alpha <= beta";
            }
            return m;
          },
          [](const PowerAbs& p) {
            return RegularityMetadata{p.mu, 1.0 + p.mu, true, true, true, ""};
          },
          [](const Weierstrass& w) {
            return RegularityMetadata{w.mu, w.mu, false, false, false, "along k = b^j"};
          },
          [](const CantorLebesgue&) {
            return RegularityMetadata{std::log(2.0) / std::log(3.0), 1.0, false, true, false, ""};
          },
          [](const ExpAbs&) { return RegularityMetadata{1.0, 2.0, true, true, true, ""}; },
          [](const GaussPower& g) {
            return RegularityMetadata{g.mu, 1.0 + g.mu, true, true, true, ""};
          },
      },
      d.params);
}

std::optional<double> closed_form_ft(const FunctionDescriptor& d, double nu) {
  if (const auto* e = std::get_if<ExpAbs>(&d.params)) {
    const double w = 2.0 * std::numbers::pi * nu;
    return 2.0 * e->a / (e->a * e->a + w * w);
  }
  return std::nullopt;
}

AnalyticFunction as_function(const FunctionDescriptor& d) {
  validate(d);
  return AnalyticFunction{[d](double x) { return evaluate(d, x); }, d.half_width,
                          singular_points(d), describe(d)};
}

void to_json(nlohmann::json& j, const FunctionDescriptor& d) {
  nlohmann::json params = nlohmann::json::object();
  std::visit(overloaded{
                 [&](const Chirp& c) {
                   params["alpha"] = c.alpha;
                   params["beta"] = c.beta;
                 },
                 [&](const PowerAbs& p) { params["mu"] = p.mu; },
                 [&](const Weierstrass& w) {
                   params["b"] = w.b;
                   params["mu"] = w.mu;
                 },
                 [&](const CantorLebesgue& c) { params["depth"] = c.depth; },
                 [&](const ExpAbs& e) { params["a"] = e.a; },
                 [&](const GaussPower& g) { params["mu"] = g.mu; },
             },
             d.params);
  j = nlohmann::json{{"kind", kind_name(d.kind())}, {"params", params}, {"L", d.half_width}};
}

void from_json(const nlohmann::json& j, FunctionDescriptor& d) {
  const Kind kind = kind_from_name(j.at("kind").get<std::string>());
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  d.half_width = j.value("L", 1.0);
  switch (kind) {
    case Kind::Chirp:
      d.params = Chirp{params.at("alpha").get<double>(), params.at("beta").get<double>()};
      break;
    case Kind::PowerAbs:
      d.params = PowerAbs{params.at("mu").get<double>()};
      break;
    case Kind::Weierstrass:
      d.params = Weierstrass{params.value("b", 3), params.at("mu").get<double>()};
      break;
    case Kind::CantorLebesgue:
      d.params = CantorLebesgue{params.value("depth", 40)};
      break;
    case Kind::ExpAbs:
      d.params = ExpAbs{params.at("a").get<double>()};
      break;
    case Kind::GaussPower:
      d.params = GaussPower{params.at("mu").get<double>()};
      break;
  }
  validate(d);
}

void to_json(nlohmann::json& j, const RegularityMetadata& m) {
  j = nlohmann::json{{"holder_exponent_bound", m.holder_exponent_bound},
                     {"is_AC", m.is_ac},
                     {"is_BV", m.is_bv},
                     {"finite_oscillations", m.finite_oscillations}};
  if (m.decay_exponent_predicted) {
    j["decay_exponent_predicted"] = *m.decay_exponent_predicted;
  } else {
    j["decay_exponent_predicted"] = nullptr;
  }
  if (!m.decay_note.empty()) j["decay_note"] = m.decay_note;
}

}  // namespace frl::catalog
