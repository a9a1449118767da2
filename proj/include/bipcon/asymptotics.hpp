#pragma once

// Leading-order approximations of P(G(n, m, p) connected) under the four
// scalings of c = p (n + m), and a finite-n classifier for them.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "bipcon/params.hpp"

namespace bipcon {

enum class Regime {
  kDense,       // c -> infinity
  kConstantC,   // c -> const in (0, infinity)
  kSmallC,      // c -> 0 with c sqrt(n) / ln n -> infinity
  kTinyC,       // c = o(1/n)
  kUncovered,   // none of the above hypotheses
};

std::string to_string(Regime regime);
/// Accepts "r1".."r4" (with or without an "asym-" prefix) and the long names.
std::optional<Regime> parse_regime(const std::string& name);

/// core_{e} = (1-(1-p)^n)^m (1-(1-p)^m)^{e}, with e = n in regimes 1-3 and
/// e = n-1 in regime 4. For regimes 1-3, value = core * correction. Regime 4
/// reports value = n^{m-1} m^{n-1} p^{n+m-1} and keeps the equivalent form
/// core * (1/n) in `intermediate`.
struct RegimeResult {
  Regime regime = Regime::kUncovered;
  double value = 0.0;
  double prefactor_core = 0.0;
  double correction = 1.0;
  double alpha_n = 0.0;  // regime 2 only
  double beta_m = 0.0;   // regime 2 only
  double intermediate = 0.0;  // regime 4 only
};

/// Evaluates the formula of `regime` at the finite triple. Regime 2 uses
/// `c_limit` when given, otherwise c = p (n + m).
RegimeResult asym_estimate(const GraphParams& gp, Regime regime,
                           std::optional<double> c_limit = std::nullopt);

/// alpha_n of regime 2 at finite n: (m c/(n+m)) e^{-cn/(n+m)} / (1 - e^{-cn/(n+m)}).
/// beta_m is the same expression with n and m exchanged.
double regime2_alpha(std::int64_t n, std::int64_t m, double c);

/// Limit of regime2_alpha as n -> infinity with m / n -> aspect.
double regime2_alpha_limit(double aspect, double c);

/// Finite-n thresholds; the theorem only constrains limits, so these are
/// configuration rather than derived quantities.
struct RegimeThresholds {
  double dense_log_factor = 3.0;   // R1 when c >= factor * ln(n+m)
  double constant_floor = 0.1;     // R2 when floor <= c < dense threshold
  double small_c_growth = 5.0;     // R3 when c sqrt(n) / ln n >= growth
  double tiny_scale = 0.1;         // R4 when c <= scale / n
  double aspect_tolerance = 0.25;  // |m/n - a| / a above this is uncovered
};

Regime classify_regime(const GraphParams& gp, double aspect,
                       const RegimeThresholds& thresholds = {});

}  // namespace bipcon
