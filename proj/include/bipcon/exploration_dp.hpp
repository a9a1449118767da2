#pragma once

// Exact P(G(n, m, p) connected) as the total weight of exploration
// trajectories that activate every vertex without stalling.

#include <vector>

#include "bipcon/lattice.hpp"
#include "bipcon/params.hpp"

namespace bipcon {

/// Final lattice state of the exploration process. Left step out of column a
/// draws the newly activated right vertices from Binomial(m - a, p); each
/// processed right vertex draws new left vertices from Binomial(n-1-b, p).
/// Entry (n-1, m) is the connectivity probability when `barrier` is set;
/// without it the whole matrix sums to one.
template <typename Scalar = double>
Matrix<Scalar> exploration_lattice(const GraphParams& gp, bool barrier = true) {
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  check_lattice_capacity(n, m);
  const Scalar p = gp.p();

  std::vector<Vector<Scalar>> left_laws;
  left_laws.reserve(m + 1);
  for (std::int64_t a = 0; a <= m; ++a) {
    left_laws.push_back(binomial_pmf_row<Scalar>(m - a, p));
  }
  Matrix<Scalar> kernel = Matrix<Scalar>::Zero(n, n);
  for (std::int64_t b = 0; b < n; ++b) {
    kernel.col(b).tail(n - b) = binomial_pmf_row<Scalar>(n - 1 - b, p);
  }

  return detail::sweep_lattice<Scalar>(
      n, n, m,
      [&](std::int64_t, std::int64_t a) -> const Vector<Scalar>& {
        return left_laws[a];
      },
      [&](std::int64_t) -> const Matrix<Scalar>& { return kernel; }, barrier);
}

/// P(G(n, m, p) connected); p in {0, 1} resolves to 0 and 1.
template <typename Scalar = double>
Scalar exact_connectivity_dp(const GraphParams& gp) {
  check_lattice_capacity(gp.n(), gp.m());
  if (gp.p() == 0.0) return Scalar(0);
  if (gp.p() == 1.0) return Scalar(1);
  return exploration_lattice<Scalar>(gp, true)(gp.n() - 1, gp.m());
}

}  // namespace bipcon
