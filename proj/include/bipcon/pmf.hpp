#pragma once

// Log-space probability mass kernels shared by the exact lattice sweeps.
//
// Every pmf is assembled as a sum of logarithms and exponentiated once, so
// rates and counts in the thousands stay finite in double precision.

#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Core>

#include "bipcon/errors.hpp"

namespace bipcon {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// log(k!) via the log-gamma function.
template <typename Scalar>
Scalar log_factorial(std::int64_t k) {
  using std::lgamma;
  return lgamma(static_cast<Scalar>(k) + Scalar(1));
}

/// log C(n, k); -inf outside 0 <= k <= n.
template <typename Scalar>
Scalar log_binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<Scalar>::infinity();
  return log_factorial<Scalar>(n) - log_factorial<Scalar>(k) -
         log_factorial<Scalar>(n - k);
}

/// log of e^{-lambda} lambda^k / k!.
template <typename Scalar>
Scalar log_poisson_pmf(std::int64_t k, Scalar lambda) {
  using std::isfinite;
  using std::log;
  if (k < 0) throw DomainError("poisson_pmf: negative k");
  if (!isfinite(lambda) || lambda < Scalar(0)) {
    throw DomainError("poisson_pmf: rate must be finite and non-negative");
  }
  if (lambda == Scalar(0)) {
    return k == 0 ? Scalar(0) : -std::numeric_limits<Scalar>::infinity();
  }
  return static_cast<Scalar>(k) * log(lambda) - lambda -
         log_factorial<Scalar>(k);
}

template <typename Scalar>
Scalar poisson_pmf(std::int64_t k, Scalar lambda) {
  using std::exp;
  return exp(log_poisson_pmf<Scalar>(k, lambda));
}

/// P(Bin(trials, p) = k).
template <typename Scalar>
Scalar binomial_pmf(std::int64_t trials, std::int64_t k, Scalar p) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (trials < 0) throw DomainError("binomial_pmf: negative trial count");
  if (!(p >= Scalar(0) && p <= Scalar(1))) {
    throw DomainError("binomial_pmf: probability outside [0, 1]");
  }
  if (k < 0 || k > trials) return Scalar(0);
  if (p == Scalar(0)) return k == 0 ? Scalar(1) : Scalar(0);
  if (p == Scalar(1)) return k == trials ? Scalar(1) : Scalar(0);
  const Scalar logp = log_binomial_coefficient<Scalar>(trials, k) +
                      static_cast<Scalar>(k) * log(p) +
                      static_cast<Scalar>(trials - k) * log1p(-p);
  return exp(logp);
}

/// Poisson pmf at 0..last, each entry computed independently in log-space.
template <typename Scalar>
Vector<Scalar> poisson_pmf_row(Scalar lambda, std::int64_t last) {
  Vector<Scalar> row(last + 1);
  for (std::int64_t k = 0; k <= last; ++k) row(k) = poisson_pmf<Scalar>(k, lambda);
  return row;
}

/// Binomial(trials, p) pmf at 0..trials.
template <typename Scalar>
Vector<Scalar> binomial_pmf_row(std::int64_t trials, Scalar p) {
  Vector<Scalar> row(trials + 1);
  for (std::int64_t k = 0; k <= trials; ++k) {
    row(k) = binomial_pmf<Scalar>(trials, k, p);
  }
  return row;
}

/// (1-p)^k evaluated as exp(k log1p(-p)).
template <typename Scalar>
Scalar survival_power(Scalar p, Scalar k) {
  using std::exp;
  using std::log1p;
  return exp(k * log1p(-p));
}

/// 1 - (1-p)^k without cancellation for small p.
template <typename Scalar>
Scalar one_minus_survival_power(Scalar p, Scalar k) {
  using std::expm1;
  using std::log1p;
  return -expm1(k * log1p(-p));
}

}  // namespace bipcon
