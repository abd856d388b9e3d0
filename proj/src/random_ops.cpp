#include "hierlab/random_ops.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hierlab {

DenseOperator random_operator(int n_particles, int d, Rng& rng) {
    check_capacity(d, n_particles);
    const Eigen::Index dim = pow_dim(d, n_particles);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = std::complex<double>(u(rng), u(rng));
    return {n_particles, d, std::move(m)};
}

DenseOperator random_hermitian(int n_particles, int d, Rng& rng) {
    DenseOperator a = random_operator(n_particles, d, rng);
    return {n_particles, d, Eigen::MatrixXcd(0.5 * (a.m + a.m.adjoint()))};
}

DenseOperator random_density(int n_particles, int d, Rng& rng) {
    DenseOperator a = random_operator(n_particles, d, rng);
    Eigen::MatrixXcd pos = a.m * a.m.adjoint();
    pos /= pos.trace().real();
    return {n_particles, d, std::move(pos)};
}

DenseOperator random_trace_class(int n_particles, int d, double trace_norm_target, Rng& rng) {
    DenseOperator h = random_hermitian(n_particles, d, rng);
    const double norm = trace_norm(h);
    return {n_particles, d, Eigen::MatrixXcd(h.m * (trace_norm_target / norm))};
}

DenseOperator random_symmetric_hermitian(int n_particles, int d, Rng& rng) {
    DenseOperator h = random_hermitian(n_particles, d, rng);
    // average over the permutation group
    std::vector<int> perm(static_cast<std::size_t>(n_particles));
    std::iota(perm.begin(), perm.end(), 0);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(h.dim(), h.dim());
    double count = 0;
    do {
        Eigen::MatrixXcd p = permutation_operator(n_particles, d, perm).m;
        acc += p * h.m * p.adjoint();
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {n_particles, d, Eigen::MatrixXcd(acc / count)};
}

} // namespace hierlab
