#pragma once

// Intensities of the two inhomogeneous Poisson walks attached to G(n, m, p)
// and the mean curves of A_k, B_k and S_k = B_{A_k} - k.

#include <cmath>

#include "bipcon/params.hpp"
#include "bipcon/pmf.hpp"

namespace bipcon {

/// alpha(i-1) is the rate of the i-th left increment X_i, beta(j-1) the rate
/// of the j-th right increment Y_j. Both decay geometrically by (1-p) and sum
/// to m and n respectively.
template <typename Scalar>
struct WalkParams {
  Vector<Scalar> alpha;
  Vector<Scalar> beta;
};

/// mu(k-1) = E A_k for k = 1..n, eta(k-1) = E B_k for k = 1..m,
/// eb_at_a(k-1) = E B_{A_k} = n (1 - e^{-mu_k p}) / (1 - (1-p)^m) and
/// es(k-1) = E S_k = E B_{A_k} - k.
template <typename Scalar>
struct ExpectationCurves {
  Vector<Scalar> mu;
  Vector<Scalar> eta;
  Vector<Scalar> eb_at_a;
  Vector<Scalar> es;
};

namespace detail {

// rate_total * p (1-p)^{i} / (1 - (1-p)^len) for i = 0..count-1.
template <typename Scalar>
Vector<Scalar> geometric_rates(Scalar rate_total, Scalar p, std::int64_t len,
                               std::int64_t count) {
  const Scalar head =
      rate_total * p / one_minus_survival_power<Scalar>(p, Scalar(len));
  Vector<Scalar> rates(count);
  for (std::int64_t i = 0; i < count; ++i) {
    rates(i) = head * survival_power<Scalar>(p, Scalar(i));
  }
  return rates;
}

}  // namespace detail

/// Rate of the j-th right increment (1-based) for any j >= 1. Indices past m
/// continue the same geometric law; unconditioned walk samples need them
/// whenever A_k overshoots m.
template <typename Scalar>
Scalar beta_rate(const GraphParams& gp, std::int64_t j) {
  const Scalar p = gp.p();
  return Scalar(gp.n()) * p * survival_power<Scalar>(p, Scalar(j - 1)) /
         one_minus_survival_power<Scalar>(p, Scalar(gp.m()));
}

template <typename Scalar = double>
WalkParams<Scalar> walk_params(const GraphParams& gp) {
  require_interior(gp);
  const Scalar p = gp.p();
  return {detail::geometric_rates<Scalar>(Scalar(gp.m()), p, gp.n(), gp.n()),
          detail::geometric_rates<Scalar>(Scalar(gp.n()), p, gp.m(), gp.m())};
}

/// E B_{A_k} given mu_k = E A_k; uses E[(1-p)^{A_k}] = e^{-mu_k p}.
template <typename Scalar>
Scalar expected_b_at_a(const GraphParams& gp, Scalar mu) {
  using std::expm1;
  const Scalar p = gp.p();
  return Scalar(gp.n()) * -expm1(-mu * p) /
         one_minus_survival_power<Scalar>(p, Scalar(gp.m()));
}

template <typename Scalar = double>
ExpectationCurves<Scalar> expectation_curves(const GraphParams& gp) {
  require_interior(gp);
  const Scalar p = gp.p();
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  const Scalar den_n = one_minus_survival_power<Scalar>(p, Scalar(n));
  const Scalar den_m = one_minus_survival_power<Scalar>(p, Scalar(m));

  ExpectationCurves<Scalar> out{Vector<Scalar>(n), Vector<Scalar>(m),
                                Vector<Scalar>(n), Vector<Scalar>(n)};
  for (std::int64_t k = 1; k <= n; ++k) {
    out.mu(k - 1) =
        k == n ? Scalar(m)
               : Scalar(m) * one_minus_survival_power<Scalar>(p, Scalar(k)) / den_n;
    out.eb_at_a(k - 1) = expected_b_at_a<Scalar>(gp, out.mu(k - 1));
    out.es(k - 1) = out.eb_at_a(k - 1) - Scalar(k);
  }
  for (std::int64_t k = 1; k <= m; ++k) {
    out.eta(k - 1) =
        k == m ? Scalar(n)
               : Scalar(n) * one_minus_survival_power<Scalar>(p, Scalar(k)) / den_m;
  }
  return out;
}

}  // namespace bipcon
