#include "frl/theory.hpp"

#include <cmath>
#include <numeric>

namespace frl::theory {

namespace {

constexpr double kExact = 1e-12;

__extension__ typedef __int128 i128;

// Decides alpha + c == shift*beta + beta*d over c, d in [0, bound], exactly.
bool rational_coincidence(Rational a, Rational b, int shift, int bound) {
  // (a.num + c a.den) b.den == b.num a.den (shift + d)
  const i128 rhs_unit = static_cast<i128>(b.num) * a.den;
  if (rhs_unit == 0) return false;
  for (int c = 0; c <= bound; ++c) {
    const i128 lhs = (static_cast<i128>(a.num) + static_cast<i128>(c) * a.den) * b.den;
    if (lhs % rhs_unit != 0) continue;
    const i128 d = lhs / rhs_unit - shift;
    if (d >= 0 && d <= bound) return true;
  }
  return false;
}

bool float_coincidence(double alpha, double beta, int shift, int bound) {
  for (int c = 0; c <= bound; ++c) {
    const double d = std::round((alpha + c) / beta - shift);
    if (d < 0.0 || d > bound) continue;
    if (std::abs(alpha + c - (shift * beta + beta * d)) < kExact) return true;
  }
  return false;
}

int shift_of(ChirpIntegral which) { return which == ChirpIntegral::I1 ? 1 : 2; }

}  // namespace

TheoryPrediction predict_theorem1(int m, double mu) {
  if (m < 0) throw DomainError("predict_theorem1: m must be >= 0");
  if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("predict_theorem1: need 0 < mu <= 1");
  TheoryPrediction p;
  p.decay_exponent = 1.0 + m + mu;
  p.holder_exponent = mu;
  p.smoothness_order = m;
  p.conditions = {{"AC", true}, {"holder", true}, {"finite_oscillations", true}};
  p.source = Source::Theorem1;
  return p;
}

HolderInference infer_holder_from_decay(double rho) {
  if (!(rho > 1.0) || !std::isfinite(rho)) {
    throw DomainError("infer_holder_from_decay: need rho > 1");
  }
  const double x = rho - 1.0;
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < kExact) {
    throw DomainError("infer_holder_from_decay: rho - 1 is an integer, mu would be 0");
  }
  const int m = static_cast<int>(std::floor(x));
  const double mu = x - m;
  HolderInference h{m, mu, false, AcStatus::Undecidable};
  if (std::abs(mu - 0.5) < kExact) {
    h.ac_status = AcStatus::OpenQuestion;
  } else if (mu > 0.5) {
    h.ac_status = AcStatus::Implied;
    h.implies_ac = true;
  }
  return h;
}

double chirp_holder(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0)) throw DomainError("chirp_holder: need alpha, beta > 0");
  const double e = alpha / (1.0 + beta);
  if (e > 1.0 + kExact) throw DomainError("chirp_holder: alpha/(1+beta) exceeds 1");
  return std::min(e, 1.0);
}

std::optional<Rational> as_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents p_n/q_n of the continued fraction of x.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    if (std::abs(a) > 9e15) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < kExact) {
      return Rational{p1, q1};
    }
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

bool pole_coincidence(Rational alpha, Rational beta, ChirpIntegral which, int search_bound) {
  if (alpha.den <= 0 || beta.den <= 0) throw DomainError("pole_coincidence: denominators must be > 0");
  if (alpha.num <= 0 || beta.num <= 0) throw DomainError("pole_coincidence: need alpha, beta > 0");
  if (search_bound < 1) throw DomainError("pole_coincidence: search_bound must be >= 1");
  return rational_coincidence(alpha, beta, shift_of(which), search_bound);
}

bool pole_coincidence(double alpha, double beta, ChirpIntegral which, int search_bound) {
  if (!(alpha > 0.0 && beta > 0.0)) throw DomainError("pole_coincidence: need alpha, beta > 0");
  if (search_bound < 1) throw DomainError("pole_coincidence: search_bound must be >= 1");
  const auto ra = as_rational(alpha);
  const auto rb = as_rational(beta);
  if (ra && rb) return rational_coincidence(*ra, *rb, shift_of(which), search_bound);
  return float_coincidence(alpha, beta, shift_of(which), search_bound);
}

TheoryPrediction predict_chirp_decay(double alpha, double beta, DecayMode mode) {
  if (!(beta > 0.0 && alpha > beta)) {
    throw PreconditionError("predict_chirp_decay: absolute continuity needs 0 < beta < alpha");
  }
  const bool c1 = pole_coincidence(alpha, beta, ChirpIntegral::I1);
  const bool c2 = pole_coincidence(alpha, beta, ChirpIntegral::I2);
  if (c1 || c2) {
    throw PoleCoincidenceError(std::string("predict_chirp_decay: Gamma poles coincide for ") +
                               (c1 ? "I1" : "I2") + "; decay rate undetermined");
  }
  const double rho_i2 = alpha < 2.0 * beta ? 1.0 + alpha - beta - beta * (beta - alpha)
                                           : 1.0 + alpha - beta + beta * beta;
  const double rho_i1 = 1.0 + alpha + beta * beta;
  TheoryPrediction p;
  p.decay_exponent = std::min(rho_i2, rho_i1);
  if (mode == DecayMode::Series) p.decay_exponent = std::min(2.0, p.decay_exponent);
  if (alpha / (1.0 + beta) <= 1.0) p.holder_exponent = alpha / (1.0 + beta);
  p.conditions = {{"AC", true},
                  {"holder", true},
                  {"finite_oscillations", false},
                  {"pole_conditions", true}};
  p.source = mode == DecayMode::Series ? Source::ChirpSeries : Source::ChirpTransform;
  p.note = alpha < 2.0 * beta ? "branch alpha < 2 beta" : "branch alpha >= 2 beta";
  return p;
}

TheoryPrediction predict_catalog(const catalog::FunctionDescriptor& d) {
  using namespace catalog;
  catalog::validate(d);
  return std::visit(
      [](const auto& q) -> TheoryPrediction {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, Chirp>) {
          return predict_chirp_decay(q.alpha, q.beta, DecayMode::Series);
        } else if constexpr (std::is_same_v<T, PowerAbs> || std::is_same_v<T, GaussPower>) {
          return predict_theorem1(0, q.mu);
        } else if constexpr (std::is_same_v<T, ExpAbs>) {
          return predict_theorem1(0, 1.0);
        } else if constexpr (std::is_same_v<T, Weierstrass>) {
          TheoryPrediction p;
          p.decay_exponent = q.mu;
          p.holder_exponent = q.mu;
          p.conditions = {{"AC", false}, {"holder", true}, {"finite_oscillations", false}};
          p.source = Source::KnownExample;
          p.note = "along the lacunary sequence k = b^j";
          return p;
        } else {
          TheoryPrediction p;
          p.decay_exponent = 1.0;
          p.holder_exponent = std::log(2.0) / std::log(3.0);
          p.conditions = {{"AC", false}, {"holder", true}, {"finite_oscillations", false}};
          p.source = Source::KnownExample;
          p.note = "BV but singular; Hoelder alone does not improve the rate";
          return p;
        }
      },
      d.params);
}

std::string_view source_name(Source s) {
  switch (s) {
    case Source::Theorem1: return "Theorem1";
    case Source::ChirpSeries: return "ChirpSeries";
    case Source::ChirpTransform: return "ChirpFT";
    case Source::KnownExample: return "KnownExample";
  }
  return "?";
}

std::string_view ac_status_name(AcStatus s) {
  switch (s) {
    case AcStatus::Implied: return "implied";
    case AcStatus::Undecidable: return "undecidable";
    case AcStatus::OpenQuestion: return "open_question";
  }
  return "?";
}

void to_json(nlohmann::json& j, const TheoryPrediction& p) {
  nlohmann::json conds = nlohmann::json::object();
  for (const auto& c : p.conditions) conds[c.name] = c.satisfied;
  j = nlohmann::json{{"decay_exponent", p.decay_exponent},
                     {"smoothness_order", p.smoothness_order},
                     {"conditions", conds},
                     {"source", source_name(p.source)}};
  j["holder_exponent"] = p.holder_exponent ? nlohmann::json(*p.holder_exponent) : nlohmann::json();
  if (!p.note.empty()) j["note"] = p.note;
}

void to_json(nlohmann::json& j, const HolderInference& h) {
  j = nlohmann::json{{"m", h.m},
                     {"mu", h.mu},
                     {"implies_AC", h.implies_ac},
                     {"ac_status", ac_status_name(h.ac_status)}};
}

}  // namespace frl::theory
