#include "bipcon/asymptotics.hpp"

#include <cmath>

#include "bipcon/errors.hpp"

namespace bipcon {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kDense: return "R1-dense";
    case Regime::kConstantC: return "R2-constant-c";
    case Regime::kSmallC: return "R3-small-c";
    case Regime::kTinyC: return "R4-tiny-c";
    case Regime::kUncovered: return "uncovered";
  }
  return "uncovered";
}

std::optional<Regime> parse_regime(const std::string& name) {
  std::string key = name;
  if (key.rfind("asym-", 0) == 0) key = key.substr(5);
  if (key == "r1" || key == "R1" || key == "R1-dense") return Regime::kDense;
  if (key == "r2" || key == "R2" || key == "R2-constant-c") return Regime::kConstantC;
  if (key == "r3" || key == "R3" || key == "R3-small-c") return Regime::kSmallC;
  if (key == "r4" || key == "R4" || key == "R4-tiny-c") return Regime::kTinyC;
  return std::nullopt;
}

namespace {

// log(1 - (1-p)^k)
double log_cover(double p, double k) {
  return std::log(-std::expm1(k * std::log1p(-p)));
}

double core(const GraphParams& gp, std::int64_t right_exponent) {
  const double p = gp.p();
  return std::exp(static_cast<double>(gp.m()) * log_cover(p, static_cast<double>(gp.n())) +
                  static_cast<double>(right_exponent) *
                      log_cover(p, static_cast<double>(gp.m())));
}

// x e^{-x} / (1 - e^{-x}) scaled by `weight`.
double weighted_odds(double weight, double x) {
  return weight * std::exp(-x) / -std::expm1(-x);
}

}  // namespace

double regime2_alpha(std::int64_t n, std::int64_t m, double c) {
  const double total = static_cast<double>(n + m);
  return weighted_odds(static_cast<double>(m) * c / total,
                       c * static_cast<double>(n) / total);
}

double regime2_alpha_limit(double aspect, double c) {
  return weighted_odds(aspect * c / (1.0 + aspect), c / (1.0 + aspect));
}

RegimeResult asym_estimate(const GraphParams& gp, Regime regime,
                           std::optional<double> c_limit) {
  require_interior(gp);
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  RegimeResult out;
  out.regime = regime;
  switch (regime) {
    case Regime::kDense:
      out.prefactor_core = core(gp, n);
      out.correction = 1.0;
      break;
    case Regime::kConstantC: {
      const double c = c_limit.value_or(gp.c());
      out.alpha_n = regime2_alpha(n, m, c);
      out.beta_m = regime2_alpha(m, n, c);
      out.prefactor_core = core(gp, n);
      out.correction = 1.0 - out.alpha_n * out.beta_m;
      break;
    }
    case Regime::kSmallC:
      out.prefactor_core = core(gp, n);
      out.correction = gp.c() / 2.0;
      break;
    case Regime::kTinyC: {
      out.prefactor_core = core(gp, n - 1);
      out.correction = 1.0 / static_cast<double>(n);
      out.intermediate = out.prefactor_core * out.correction;
      const double log_trees = static_cast<double>(m - 1) * std::log(static_cast<double>(n)) +
                               static_cast<double>(n - 1) * std::log(static_cast<double>(m));
      out.value = std::exp(log_trees + static_cast<double>(n + m - 1) * std::log(gp.p()));
      return out;
    }
    case Regime::kUncovered:
      throw DomainError("asym_estimate: no formula for an uncovered regime");
  }
  out.value = out.prefactor_core * out.correction;
  return out;
}

Regime classify_regime(const GraphParams& gp, double aspect,
                       const RegimeThresholds& t) {
  if (!(aspect > 0.0)) throw DomainError("classify_regime: aspect ratio must be positive");
  const double n = static_cast<double>(gp.n());
  const double m = static_cast<double>(gp.m());
  if (std::fabs(m / n - aspect) / aspect > t.aspect_tolerance) return Regime::kUncovered;

  const double c = gp.c();
  if (c >= t.dense_log_factor * std::log(n + m)) return Regime::kDense;
  if (c >= t.constant_floor) return Regime::kConstantC;
  if (c <= t.tiny_scale / n) return Regime::kTinyC;
  if (gp.n() > 1 && c * std::sqrt(n) / std::log(n) >= t.small_c_growth) {
    return Regime::kSmallC;
  }
  return Regime::kUncovered;
}

}  // namespace bipcon
