#pragma once

// The (k, a, b) lattice shared by the exact connectivity sweeps.
//
// After k left steps the state is a matrix with rows b = 0..n-1 (left
// vertices activated besides the root) and columns a = 0..m (right vertices
// activated, all of them already processed). One left step moves column a to
// a' >= a with a caller-supplied law, then absorbs right vertices a+1..a' one
// at a time, each through a lower-triangular kernel on b. Mass heading to
// different targets a' is absorbed together, so each right vertex costs one
// triangular-times-dense product.

#include <cstdint>
#include <string>

#include "bipcon/errors.hpp"
#include "bipcon/pmf.hpp"

namespace bipcon {

/// Upper bound on n * n * (m + 1), the number of (k, a, b) states swept.
inline constexpr std::int64_t kMaxLatticeStates = 10'000'000;

inline void check_lattice_capacity(std::int64_t n, std::int64_t m) {
  if (n * n * (m + 1) > kMaxLatticeStates) {
    throw CapacityError("lattice sweep: n^2 (m+1) = " +
                        std::to_string(n * n * (m + 1)) + " exceeds budget " +
                        std::to_string(kMaxLatticeStates));
  }
}

namespace detail {

/// Runs `steps` left steps from the state (a = 0, b = 0) on a lattice with
/// `rows` values of b.
///
/// left_step(k, j) returns the law of the jump a -> j + x, x = 0..m-j, for
/// the (k+1)-th left step out of column j. right_kernel(j) returns the
/// rows x rows kernel K(b', b) for absorbing right vertex j (1-based); only
/// its lower triangle is read. With `barrier`, rows b < k are cleared after
/// left step k for 0 < k < steps.
template <typename Scalar, typename LeftStep, typename RightKernel>
Matrix<Scalar> sweep_lattice(std::int64_t steps, std::int64_t rows,
                             std::int64_t m, LeftStep&& left_step,
                             RightKernel&& right_kernel, bool barrier) {
  Matrix<Scalar> state = Matrix<Scalar>::Zero(rows, m + 1);
  Matrix<Scalar> next(rows, m + 1);
  Matrix<Scalar> pending(rows, m + 1);
  state(0, 0) = Scalar(1);

  for (std::int64_t k = 0; k < steps; ++k) {
    // Under the barrier, rows below k are already empty.
    const std::int64_t lo = barrier ? k : 0;
    const std::int64_t h = rows - lo;
    pending.setZero();
    next.setZero();
    bool live = false;
    for (std::int64_t j = 0; j <= m; ++j) {
      const std::int64_t w = m + 1 - j;
      auto block = pending.block(lo, j, h, w);
      if (live && j > 0) {
        const Matrix<Scalar>& kernel = right_kernel(j);
        block = kernel.bottomRightCorner(h, h)
                    .template triangularView<Eigen::Lower>() *
                block;
      }
      const auto origin = state.col(j).segment(lo, h);
      if ((origin.array() != Scalar(0)).any()) {
        const auto& law = left_step(k, j);
        block.noalias() += origin * law.head(w).transpose();
        live = true;
      }
      next.col(j).segment(lo, h) = pending.col(j).segment(lo, h);
    }
    if (barrier && k + 1 < steps) next.topRows(k + 1).setZero();
    state.swap(next);
  }
  return state;
}

}  // namespace detail
}  // namespace bipcon
