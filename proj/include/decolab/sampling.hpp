#pragma once

#include <vector>

#include "decolab/hilbert.hpp"
#include "decolab/rng.hpp"

namespace decolab::sampling {

using hilbert::Matrix;
using hilbert::Vector;

/// Haar-ish random state: i.i.d. complex normal amplitudes, normalized.
hilbert::StateVector random_state(CounterRng& rng, const SpaceLayout& layout);

/// Random unitary from the QR decomposition of a complex Gaussian matrix,
/// with the R diagonal phase-fixed so the result is unique.
Matrix random_unitary(CounterRng& rng, int dim);

/// First `count` columns of a random unitary.
std::vector<Vector> random_orthonormal_set(CounterRng& rng, int dim, int count);

/// Random GUE-like hermitian matrix with entries of the given scale.
Matrix random_hermitian(CounterRng& rng, int dim, double scale = 1.0);

/// Random full-rank mixed state: random weights over a random orthonormal
/// eigenbasis.
hilbert::DensityOperator random_density(CounterRng& rng, const SpaceLayout& layout);

}  // namespace decolab::sampling
