#include "bipcon/exploration.hpp"

#include <bit>
#include <deque>

namespace bipcon {

bool ExplorationTrace::in_trajectory_set() const {
  const auto n = static_cast<std::int64_t>(r.size());
  const auto m = static_cast<std::int64_t>(l.size());
  if (s_right[n] != m || s_left[m] != n - 1) return false;
  for (std::int64_t k = 1; k < n; ++k) {
    if (deficit[k - 1] < 0) return false;
  }
  return true;
}

ExplorationTrace explore(const BipartiteGraph& g) {
  using Word = BipartiteGraph::Word;
  const std::int64_t n = g.n();
  const std::int64_t m = g.m();

  ExplorationTrace trace;
  trace.r.assign(n, 0);
  trace.l.assign(m, 0);

  std::vector<Word> active_left(g.col_words(), 0);
  std::vector<Word> active_right(g.row_words(), 0);
  std::deque<std::int64_t> left_queue{0};
  std::deque<std::int64_t> right_queue;
  active_left[0] = 1;

  // Moves the inactive members of `adj` into the active set and queue,
  // in increasing index order; returns how many were activated.
  auto activate = [](const Word* adj, std::vector<Word>& active,
                     std::deque<std::int64_t>& queue) {
    std::int64_t count = 0;
    for (std::size_t w = 0; w < active.size(); ++w) {
      Word fresh = adj[w] & ~active[w];
      active[w] |= fresh;
      for (; fresh; fresh &= fresh - 1, ++count) {
        queue.push_back(static_cast<std::int64_t>(w) * 64 + std::countr_zero(fresh));
      }
    }
    return count;
  };

  std::int64_t left_done = 0;
  std::int64_t right_done = 0;
  while (!right_queue.empty() || !left_queue.empty()) {
    if (!right_queue.empty()) {
      const std::int64_t v = right_queue.front();
      right_queue.pop_front();
      trace.l[right_done++] = activate(g.col(v), active_left, left_queue);
    } else {
      const std::int64_t u = left_queue.front();
      left_queue.pop_front();
      trace.r[left_done++] = activate(g.row(u), active_right, right_queue);
    }
  }

  trace.s_right.assign(n + 1, 0);
  trace.s_left.assign(m + 1, 0);
  for (std::int64_t i = 0; i < n; ++i) trace.s_right[i + 1] = trace.s_right[i] + trace.r[i];
  for (std::int64_t j = 0; j < m; ++j) trace.s_left[j + 1] = trace.s_left[j] + trace.l[j];
  trace.deficit.assign(n, 0);
  for (std::int64_t k = 1; k <= n; ++k) {
    trace.deficit[k - 1] = trace.s_left[trace.s_right[k]] - k;
  }
  return trace;
}

}  // namespace bipcon
