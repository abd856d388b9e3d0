#pragma once

// Seeded random operator fixtures. Tests and the check runner share these so
// "100 random fixtures" means the same thing everywhere and reports can
// record the seed that produced them.

#include <random>

#include "hierlab/hilbert.hpp"

namespace hierlab {

using Rng = std::mt19937_64;

// entries uniform in [-1,1] + i[-1,1]
DenseOperator random_operator(int n_particles, int d, Rng& rng);

DenseOperator random_hermitian(int n_particles, int d, Rng& rng);

// positive semidefinite with unit trace
DenseOperator random_density(int n_particles, int d, Rng& rng);

// Hermitian, scaled to the requested trace norm
DenseOperator random_trace_class(int n_particles, int d, double trace_norm_target, Rng& rng);

// Hermitian and invariant under every particle transposition (usable as a
// pair potential or a symmetric probe)
DenseOperator random_symmetric_hermitian(int n_particles, int d, Rng& rng);

} // namespace hierlab
