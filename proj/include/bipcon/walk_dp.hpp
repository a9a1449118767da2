#pragma once

// Connectivity through the composed Poisson walk S_k = B_{A_k} - k.
//
// With A_k = X_1 + ... + X_k, X_i ~ Poisson(alpha_i), and B_j the partial
// sums of Y_j ~ Poisson(beta_j),
//
//   P(connected) = (1-(1-p)^n)^m (1-(1-p)^m)^{n-1}
//                  * P(S_k >= 0, 0 < k < n | A_n = m, B_m = n-1).
//
// The joint probability is swept on the same lattice as the exploration
// process, with Poisson steps truncated at a <= m and b <= n-1; paths that
// leave those ranges cannot return to the terminal state.

#include <cmath>
#include <vector>

#include "bipcon/lattice.hpp"
#include "bipcon/params.hpp"
#include "bipcon/walk_params.hpp"

namespace bipcon {

template <typename Scalar>
struct WalkDpResult {
  Scalar conditional;  // P(S_k >= 0, 0 < k < n | A_n = m, B_m = n-1)
  Scalar prefactor;    // (1-(1-p)^n)^m (1-(1-p)^m)^{n-1}
  Scalar endpoint_a;   // P(A_n = m) = e^{-m} m^m / m!
  Scalar endpoint_b;   // P(B_m = n-1) = e^{-n} n^{n-1} / (n-1)!
  Scalar total;        // prefactor * conditional
};

/// Final lattice state of the Poisson walk pair. Entry (b, a) is the
/// probability that A_n = a and B_a = b (with the barrier: and S_k >= 0 for
/// 0 < k < n). With `overflow`, an extra row n collects every path with
/// B_a >= n, so each column sums to P(A_n = a).
template <typename Scalar = double>
Matrix<Scalar> walk_lattice(const GraphParams& gp, bool barrier = true,
                            bool overflow = false) {
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  check_lattice_capacity(n, m);
  const WalkParams<Scalar> rates = walk_params<Scalar>(gp);
  const std::int64_t rows = overflow ? n + 1 : n;

  std::vector<Vector<Scalar>> right_laws;
  right_laws.reserve(m);
  for (std::int64_t j = 0; j < m; ++j) {
    right_laws.push_back(poisson_pmf_row<Scalar>(rates.beta(j), n - 1));
  }

  std::int64_t law_step = -1;
  Vector<Scalar> left_law;
  std::int64_t kernel_index = -1;
  Matrix<Scalar> kernel = Matrix<Scalar>::Zero(rows, rows);
  if (overflow) kernel(n, n) = Scalar(1);

  return detail::sweep_lattice<Scalar>(
      n, rows, m,
      [&](std::int64_t k, std::int64_t a) -> Vector<Scalar> {
        if (k != law_step) {
          left_law = poisson_pmf_row<Scalar>(rates.alpha(k), m);
          law_step = k;
        }
        return left_law.head(m + 1 - a);
      },
      [&](std::int64_t j) -> const Matrix<Scalar>& {
        if (j != kernel_index) {
          const Vector<Scalar>& law = right_laws[j - 1];
          for (std::int64_t b = 0; b < n; ++b) {
            kernel.col(b).segment(b, n - b) = law.head(n - b);
            if (overflow) kernel(n, b) = Scalar(1) - law.head(n - b).sum();
          }
          kernel_index = j;
        }
        return kernel;
      },
      barrier);
}

/// (1-(1-p)^n)^m (1-(1-p)^m)^{n-1}, assembled in log-space.
template <typename Scalar = double>
Scalar walk_prefactor(const GraphParams& gp) {
  using std::exp;
  using std::log;
  const Scalar p = gp.p();
  return exp(Scalar(gp.m()) * log(one_minus_survival_power<Scalar>(p, Scalar(gp.n()))) +
             Scalar(gp.n() - 1) *
                 log(one_minus_survival_power<Scalar>(p, Scalar(gp.m()))));
}

template <typename Scalar = double>
WalkDpResult<Scalar> connectivity_via_walk(const GraphParams& gp) {
  require_interior(gp);
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  const Scalar joint = walk_lattice<Scalar>(gp, true)(n - 1, m);

  WalkDpResult<Scalar> out{};
  out.endpoint_a = poisson_pmf<Scalar>(m, Scalar(m));
  out.endpoint_b = poisson_pmf<Scalar>(n - 1, Scalar(n));
  out.conditional = joint / (out.endpoint_a * out.endpoint_b);
  out.prefactor = walk_prefactor<Scalar>(gp);
  out.total = out.prefactor * out.conditional;
  return out;
}

template <typename Scalar = double>
Scalar conditional_nonneg_prob(const GraphParams& gp) {
  return connectivity_via_walk<Scalar>(gp).conditional;
}

}  // namespace bipcon
