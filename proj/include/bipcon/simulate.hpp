#pragma once

// Seeded Monte Carlo over G(n, m, p) and over the Poisson walk pair.
//
// Every random quantity is drawn from RandomStream(seed, stream): graph
// sample s and walk realization r use stream s and r respectively, so
// results do not depend on how replicas are split across workers.

#include <cstdint>
#include <string>
#include <vector>

#include "bipcon/bipartite_graph.hpp"
#include "bipcon/params.hpp"

namespace bipcon {

enum class Method { kMonteCarlo, kBrute, kExplorationDp, kWalkDp, kAsymptotic };

std::string to_string(Method method);

struct ConnectivityEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;  // sqrt(p(1-p)/N) for Monte Carlo, else 0
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  Method method = Method::kMonteCarlo;
};

/// One realization of the walks A, B and their composition.
///
/// a[k-1] = A_k for k = 1..n. b[j] = B_j for j = 0..len with b[0] = 0, where
/// len = max(m, A_n); rates past index m continue the geometric law so that
/// B_{A_k} is always defined. s[k-1] = B_{A_k} - k for k = 1..n.
/// v[j] = #{1 <= i <= n : A_i <= j} for j = 0..len.
struct WalkSample {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> v;

  /// min_k S_k >= 0 over k = 1..n.
  bool deficit_nonnegative() const;
  /// min_j (B_j - V_j) >= 0 over j = 0..len.
  bool recovery_dominated() const;
};

BipartiteGraph sample_graph(const GraphParams& gp, std::uint64_t seed,
                            std::uint64_t stream = 0);

/// Fraction of connected samples among `samples` independent graphs.
ConnectivityEstimate mc_connectivity(const GraphParams& gp, std::int64_t samples,
                                     std::uint64_t seed, int workers = 1);

/// Draws X_1..X_n then Y_1..Y_len from one stream. Throws if the two
/// nonnegativity characterisations disagree.
WalkSample sample_walk(const GraphParams& gp, std::uint64_t seed,
                       std::uint64_t stream = 0);

struct CurveTables {
  std::string deficit_csv;   // k,ES,S_r1,...,S_rR for k = 1..n
  std::string recovery_csv;  // k,B,V,ref_line for k = 1..m (realization 1)
};

/// CSV data behind plots of E S_k with sample paths, and of B_k against
/// V^A_k with the line k n / m.
CurveTables curve_csv(const GraphParams& gp, std::int64_t realizations,
                      std::uint64_t seed, int workers = 1);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace bipcon
