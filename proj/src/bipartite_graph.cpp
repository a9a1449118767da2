#include "bipcon/bipartite_graph.hpp"

#include <bit>
#include <deque>

#include "bipcon/errors.hpp"

namespace bipcon {

namespace {

constexpr std::int64_t kWordBits = 64;

std::int64_t words_for(std::int64_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::int64_t n, std::int64_t m)
    : n_(n), m_(m), row_words_(words_for(m)), col_words_(words_for(n)) {
  if (n < 1 || m < 1) {
    throw DomainError("bipartite graph parts must be non-empty");
  }
  rows_.assign(n_ * row_words_, 0);
  cols_.assign(m_ * col_words_, 0);
}

BipartiteGraph BipartiteGraph::from_rows(std::int64_t m,
                                         const std::vector<Word>& rows) {
  if (m > kWordBits) throw DomainError("from_rows: width exceeds one word");
  BipartiteGraph g(static_cast<std::int64_t>(rows.size()), m);
  const Word mask = m == kWordBits ? ~Word{0} : ((Word{1} << m) - 1);
  for (std::int64_t i = 0; i < g.n_; ++i) {
    if (rows[i] & ~mask) throw DomainError("from_rows: bit outside width m");
    for (std::int64_t j = 0; j < m; ++j) {
      if ((rows[i] >> j) & 1U) g.set_edge(i, j);
    }
  }
  return g;
}

bool BipartiteGraph::has_edge(std::int64_t left, std::int64_t right) const {
  return (rows_[left * row_words_ + right / kWordBits] >> (right % kWordBits)) & 1U;
}

void BipartiteGraph::set_edge(std::int64_t left, std::int64_t right,
                              bool present) {
  Word& r = rows_[left * row_words_ + right / kWordBits];
  Word& c = cols_[right * col_words_ + left / kWordBits];
  const Word rbit = Word{1} << (right % kWordBits);
  const Word cbit = Word{1} << (left % kWordBits);
  if (present) {
    r |= rbit;
    c |= cbit;
  } else {
    r &= ~rbit;
    c &= ~cbit;
  }
}

std::int64_t BipartiteGraph::edge_count() const {
  std::int64_t total = 0;
  for (Word w : rows_) total += std::popcount(w);
  return total;
}

bool is_connected(const BipartiteGraph& g) {
  const std::int64_t n = g.n();
  const std::int64_t m = g.m();
  std::vector<BipartiteGraph::Word> seen_left(g.col_words(), 0);
  std::vector<BipartiteGraph::Word> seen_right(g.row_words(), 0);
  // Queue entries >= 0 are left vertices, < 0 encode right vertex ~v.
  std::deque<std::int64_t> queue{0};
  seen_left[0] = 1;
  std::int64_t reached = 1;
  while (!queue.empty()) {
    const std::int64_t v = queue.front();
    queue.pop_front();
    const bool left = v >= 0;
    const BipartiteGraph::Word* adj = left ? g.row(v) : g.col(~v);
    auto& seen = left ? seen_right : seen_left;
    for (std::size_t w = 0; w < seen.size(); ++w) {
      BipartiteGraph::Word fresh = adj[w] & ~seen[w];
      seen[w] |= fresh;
      while (fresh) {
        const std::int64_t u = static_cast<std::int64_t>(w) * kWordBits +
                               std::countr_zero(fresh);
        fresh &= fresh - 1;
        queue.push_back(left ? ~u : u);
        ++reached;
      }
    }
  }
  return reached == n + m;
}

}  // namespace bipcon
