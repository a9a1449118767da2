#pragma once

#include <cstdint>
#include <vector>

#include "bipcon/bipartite_graph.hpp"

namespace bipcon {

/// Observed counts of one run of the exploration process.
///
/// r[i-1] = R_i, right vertices first activated by the i-th processed left
/// vertex; l[j-1] = L_j, left vertices first activated by the j-th processed
/// right vertex. s_right[k] = R_1 + ... + R_k and s_left[j] = L_1 + ... + L_j
/// carry an explicit zero at index 0. deficit[k-1] = s_left[s_right[k]] - k
/// counts active left vertices still waiting after the k-th left step, minus
/// one.
struct ExplorationTrace {
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> l;
  std::vector<std::int64_t> s_right;
  std::vector<std::int64_t> s_left;
  std::vector<std::int64_t> deficit;

  /// Membership in the set of trajectories realised by connected graphs:
  /// every right vertex and n-1 further left vertices activated, and the
  /// deficit non-negative after every left step k < n.
  bool in_trajectory_set() const;
};

/// Runs the exploration from left vertex 0. Active right vertices are always
/// processed before active left ones; within a side, earliest activation
/// first. Vertices never reached leave trailing zeros in r and l.
ExplorationTrace explore(const BipartiteGraph& g);

}  // namespace bipcon
