#pragma once

// Ground truth by exhaustive enumeration of all 2^{nm} edge subsets of K_{n,m}.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bipcon/params.hpp"

namespace bipcon {

/// Largest n*m accepted by the enumerating oracle.
inline constexpr std::int64_t kMaxBruteEdges = 24;

/// counts[e] = number of connected spanning subgraphs of K_{n,m} with exactly
/// e edges, e = 0..n*m.
struct EdgeCountProfile {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::uint64_t> counts;
};

EdgeCountProfile edge_count_profile(std::int64_t n, std::int64_t m);

/// sum_e counts[e] p^e (1-p)^{nm-e}.
double connectivity_from_profile(const EdgeCountProfile& profile, double p);

double brute_connectivity(const GraphParams& gp);

using Rational = boost::multiprecision::cpp_rational;

/// Exact connectivity probability for a rational edge probability.
Rational brute_connectivity_exact(std::int64_t n, std::int64_t m,
                                  const Rational& p);
Rational connectivity_from_profile_exact(const EdgeCountProfile& profile,
                                         const Rational& p);

}  // namespace bipcon
