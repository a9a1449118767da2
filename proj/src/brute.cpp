#include "bipcon/brute.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "bipcon/errors.hpp"

namespace bipcon {

namespace {

void check_capacity(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw DomainError("brute oracle: empty part");
  if (n * m > kMaxBruteEdges) {
    throw CapacityError("brute oracle: n*m = " + std::to_string(n * m) +
                        " exceeds enumeration bound " +
                        std::to_string(kMaxBruteEdges));
  }
}

// Connectivity of the subgraph encoded by `mask`, row i occupying bits
// [i*m, (i+1)*m). Expands the reached sets to a fixed point.
bool mask_connected(std::uint32_t mask, int n, int m) {
  std::array<std::uint32_t, kMaxBruteEdges> rows{};
  const std::uint32_t width = (std::uint32_t{1} << m) - 1;
  for (int i = 0; i < n; ++i) rows[i] = (mask >> (i * m)) & width;

  const std::uint32_t all_left = (std::uint32_t{1} << n) - 1;
  std::uint32_t left = 1;
  std::uint32_t right = 0;
  for (;;) {
    std::uint32_t next_right = right;
    for (std::uint32_t l = left; l; l &= l - 1) next_right |= rows[std::countr_zero(l)];
    std::uint32_t next_left = left;
    for (int i = 0; i < n; ++i) {
      if (rows[i] & next_right) next_left |= std::uint32_t{1} << i;
    }
    if (next_left == left && next_right == right) break;
    left = next_left;
    right = next_right;
  }
  return left == all_left && right == width;
}

}  // namespace

EdgeCountProfile edge_count_profile(std::int64_t n, std::int64_t m) {
  check_capacity(n, m);
  const int edges = static_cast<int>(n * m);
  EdgeCountProfile profile{n, m, std::vector<std::uint64_t>(edges + 1, 0)};
  const int min_edges = static_cast<int>(n + m - 1);
  const std::uint64_t total = std::uint64_t{1} << edges;
  for (std::uint64_t s = 0; s < total; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    const int e = std::popcount(mask);
    if (e < min_edges) continue;
    if (mask_connected(mask, static_cast<int>(n), static_cast<int>(m))) {
      ++profile.counts[e];
    }
  }
  return profile;
}

double connectivity_from_profile(const EdgeCountProfile& profile, double p) {
  const std::int64_t edges = profile.n * profile.m;
  double total = 0.0;
  for (std::int64_t e = 0; e <= edges; ++e) {
    if (profile.counts[e] == 0) continue;
    total += static_cast<double>(profile.counts[e]) * std::pow(p, e) *
             std::pow(1.0 - p, edges - e);
  }
  return total;
}

double brute_connectivity(const GraphParams& gp) {
  return connectivity_from_profile(edge_count_profile(gp.n(), gp.m()), gp.p());
}

Rational connectivity_from_profile_exact(const EdgeCountProfile& profile,
                                         const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("edge probability outside [0, 1]");
  const std::int64_t edges = profile.n * profile.m;
  const Rational q = 1 - p;
  Rational total = 0;
  for (std::int64_t e = 0; e <= edges; ++e) {
    if (profile.counts[e] == 0) continue;
    Rational term = profile.counts[e];
    for (std::int64_t t = 0; t < e; ++t) term *= p;
    for (std::int64_t t = e; t < edges; ++t) term *= q;
    total += term;
  }
  return total;
}

Rational brute_connectivity_exact(std::int64_t n, std::int64_t m,
                                  const Rational& p) {
  return connectivity_from_profile_exact(edge_count_profile(n, m), p);
}

}  // namespace bipcon
