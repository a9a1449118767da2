#pragma once

#include <cstdint>

#include "bipcon/philox.hpp"

namespace bipcon {

/// Below this rate Poisson variates come from sequential CDF inversion;
/// at or above it from Hormann's PTRS transformed rejection.
inline constexpr double kPoissonInversionLimit = 30.0;

/// One Poisson(lambda) variate. Inversion consumes exactly one uniform;
/// PTRS consumes two per trial.
std::int64_t sample_poisson(RandomStream& rng, double lambda);

}  // namespace bipcon
