#pragma once

#include <cstdint>

namespace bipcon {

/// Parameters of the random bipartite graph G(n, m, p): n left vertices,
/// m right vertices, each of the n*m cross edges present independently with
/// probability p.
class GraphParams {
 public:
  GraphParams(std::int64_t n, std::int64_t m, double p);

  /// Builds the triple from the regime parameter c = p (n + m).
  static GraphParams from_c(std::int64_t n, std::int64_t m, double c);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  double p() const { return p_; }
  double c() const { return p_ * static_cast<double>(n_ + m_); }

  /// True when 0 < p < 1, the range where the Poisson-walk intensities exist.
  bool interior() const { return p_ > 0.0 && p_ < 1.0; }

 private:
  std::int64_t n_;
  std::int64_t m_;
  double p_;
};

/// Throws DegenerateParameterError unless 0 < p < 1.
void require_interior(const GraphParams& gp);

}  // namespace bipcon
