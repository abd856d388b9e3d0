#pragma once

// Dense complex operator algebra on tensor-product spaces. Everything later
// modules evolve, trace or expand lives in one of these DenseOperators.
//
// Index convention: an n-particle basis state is |i_1 ... i_n> with particle 1
// the most significant digit, so the flat index is sum_k i_k d^{n-k}.

#include <complex>
#include <Eigen/Dense>

#include "hierlab/combinatorics.hpp"
#include "hierlab/errors.hpp"

namespace hierlab {

enum class Statistics { MaxwellBoltzmann, Bose, Fermi };
enum class Direction { Forward, Backward }; // e^{+itH} X e^{-itH} vs e^{-itH} X e^{+itH}

// Size guards; overridable (tests and the CLI may relax them deliberately).
struct CapacityLimits {
    int max_one_particle_dim = 4;
    int max_particles = 6;
};
CapacityLimits& capacity_limits();
void check_capacity(int d, int n_particles);

struct DenseOperator {
    int n_particles = 0;
    int d = 0; // one-particle dimension
    Eigen::MatrixXcd m;

    DenseOperator() = default;
    DenseOperator(int n_particles_, int d_, Eigen::MatrixXcd m_);

    static DenseOperator identity(int n_particles, int d);
    static DenseOperator zero(int n_particles, int d);

    Eigen::Index dim() const { return m.rows(); }
    std::complex<double> trace() const { return m.trace(); }
    bool is_hermitian(double tol = 1e-10) const;
    bool is_positive_semidefinite(double tol = 1e-10) const;

    DenseOperator adjoint() const { return {n_particles, d, m.adjoint()}; }
};

// total dimension d^n (guarded against overflow by check_capacity callers)
Eigen::Index pow_dim(int d, int n_particles);

// elementwise algebra on a shared space
DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(std::complex<double> c, const DenseOperator& a);
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b); // composition

// Kronecker product; a's particles come first (most significant).
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

// Trace out every particle not in `keep` (1-based positions). The result acts
// on the kept particles in ascending order; full trace is preserved.
DenseOperator partial_trace(const DenseOperator& a, const LabelSet& keep);

double trace_norm(const DenseOperator& a);    // sum of singular values
double operator_norm(const DenseOperator& a); // largest singular value

// e^{itH} X e^{-itH} (Forward, observables) or e^{-itH} X e^{itH} (Backward,
// states), via a cached Hermitian eigendecomposition of H.
DenseOperator conjugate_by_group(const DenseOperator& h, double t, const DenseOperator& x,
                                 Direction direction);

// (1/n!) sum_pi (+-1)^{|pi|} p_pi; the identity for Maxwell-Boltzmann. n <= 6.
DenseOperator symmetrizer(int n_particles, int d, Statistics stat);

// Unitary that moves the content of slot k to slot perm[k] (perm is 0-based
// over n_particles slots).
DenseOperator permutation_operator(int n_particles, int d, const std::vector<int>& perm);

// invariant under conjugation by every transposition
bool is_permutation_symmetric(const DenseOperator& a, double tol = 1e-10);

// Place a k-particle operator at the listed positions of an n-particle space,
// identity elsewhere. positions are 1-based, strictly increasing, |positions|
// equal to op.n_particles; slot j of op goes to positions[j].
DenseOperator embed(const DenseOperator& op, const LabelSet& positions, int n_particles);

// diagnostics used all over the tests
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

} // namespace hierlab
