#include "bipcon/params.hpp"

#include <cmath>
#include <string>

#include "bipcon/errors.hpp"

namespace bipcon {

GraphParams::GraphParams(std::int64_t n, std::int64_t m, double p)
    : n_(n), m_(m), p_(p) {
  if (n < 1 || m < 1) {
    throw DomainError("graph parts must be non-empty (n >= 1, m >= 1)");
  }
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw DomainError("edge probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
}

GraphParams GraphParams::from_c(std::int64_t n, std::int64_t m, double c) {
  if (n < 1 || m < 1) {
    throw DomainError("graph parts must be non-empty (n >= 1, m >= 1)");
  }
  return GraphParams(n, m, c / static_cast<double>(n + m));
}

void require_interior(const GraphParams& gp) {
  if (!gp.interior()) {
    throw DegenerateParameterError(
        "operation requires 0 < p < 1, got p = " + std::to_string(gp.p()));
  }
}

}  // namespace bipcon
