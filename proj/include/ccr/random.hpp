// Reproducible random inputs for property suites.

#pragma once

#include <random>
#include <vector>

#include "ccr/lorentz.hpp"
#include "ccr/tensor.hpp"

namespace ccr {

using Rng = std::mt19937_64;

/// Haar-like random pure state: i.i.d. complex Gaussians, normalized.
StateVector random_state(Rng& rng, std::vector<std::size_t> dims);

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// Uniform on the unit sphere.
Vec3 random_unit_vector(Rng& rng);

/// Rapidity uniform in [0, max_rapidity], direction uniform.
BoostSpec random_boost(Rng& rng, double max_rapidity);

/// Mass uniform in [0.5, 2], rapidity uniform in [0, max_rapidity], direction uniform.
FourMomentum random_momentum(Rng& rng, double max_rapidity);

}  // namespace ccr
