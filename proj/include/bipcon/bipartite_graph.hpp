#pragma once

#include <cstdint>
#include <vector>

namespace bipcon {

/// A concrete bipartite graph stored as bit rows: bit j of row i is set iff
/// left vertex i and right vertex j are adjacent. Bits past column m are
/// always clear. A transposed copy is kept so breadth-first search can expand
/// either side with word operations.
class BipartiteGraph {
 public:
  using Word = std::uint64_t;

  BipartiteGraph(std::int64_t n, std::int64_t m);

  /// Rows given as bit masks of width m <= 64.
  static BipartiteGraph from_rows(std::int64_t m, const std::vector<Word>& rows);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }

  bool has_edge(std::int64_t left, std::int64_t right) const;
  void set_edge(std::int64_t left, std::int64_t right, bool present = true);
  std::int64_t edge_count() const;

  std::int64_t row_words() const { return row_words_; }
  std::int64_t col_words() const { return col_words_; }
  const Word* row(std::int64_t left) const { return &rows_[left * row_words_]; }
  const Word* col(std::int64_t right) const { return &cols_[right * col_words_]; }

  bool operator==(const BipartiteGraph& other) const {
    return n_ == other.n_ && m_ == other.m_ && rows_ == other.rows_;
  }

 private:
  std::int64_t n_;
  std::int64_t m_;
  std::int64_t row_words_;
  std::int64_t col_words_;
  std::vector<Word> rows_;
  std::vector<Word> cols_;
};

/// True iff all n + m vertices lie in the component of left vertex 0.
bool is_connected(const BipartiteGraph& g);

}  // namespace bipcon
