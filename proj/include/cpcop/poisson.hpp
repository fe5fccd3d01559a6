#pragma once

#include <cstdint>

#include "cpcop/rng.hpp"

namespace cpcop {

// Poisson(lambda) draw. Inversion by sequential search for lambda <= 10,
// Hormann's PTRS transformed rejection above. Throws std::domain_error
// unless lambda is positive and finite.
std::uint64_t sample_poisson(double lambda, Rng& rng);

}  // namespace cpcop
