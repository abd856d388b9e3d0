#include "hierlab/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace hierlab {

CapacityLimits& capacity_limits() {
    static CapacityLimits limits;
    return limits;
}

void check_capacity(int d, int n_particles) {
    const auto& lim = capacity_limits();
    if (d < 1 || d > lim.max_one_particle_dim)
        throw capacity_error("one-particle dimension " + std::to_string(d) +
                             " outside 1.." + std::to_string(lim.max_one_particle_dim));
    if (n_particles < 0 || n_particles > lim.max_particles)
        throw capacity_error("particle count " + std::to_string(n_particles) +
                             " outside 0.." + std::to_string(lim.max_particles));
}

Eigen::Index pow_dim(int d, int n_particles) {
    Eigen::Index dim = 1;
    for (int i = 0; i < n_particles; ++i) dim *= d;
    return dim;
}

DenseOperator::DenseOperator(int n_particles_, int d_, Eigen::MatrixXcd m_)
    : n_particles(n_particles_), d(d_), m(std::move(m_)) {
    check_capacity(d, n_particles);
    const Eigen::Index want = pow_dim(d, n_particles);
    if (m.rows() != want || m.cols() != want)
        throw argument_error("DenseOperator: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(want));
}

DenseOperator DenseOperator::identity(int n_particles, int d) {
    check_capacity(d, n_particles);
    const Eigen::Index dim = pow_dim(d, n_particles);
    return {n_particles, d, Eigen::MatrixXcd::Identity(dim, dim)};
}

DenseOperator DenseOperator::zero(int n_particles, int d) {
    check_capacity(d, n_particles);
    const Eigen::Index dim = pow_dim(d, n_particles);
    return {n_particles, d, Eigen::MatrixXcd::Zero(dim, dim)};
}

bool DenseOperator::is_hermitian(double tol) const {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_positive_semidefinite(double tol) const {
    if (!is_hermitian(tol)) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

namespace {

void require_same_space(const DenseOperator& a, const DenseOperator& b, const char* who) {
    if (a.d != b.d || a.n_particles != b.n_particles)
        throw argument_error(std::string(who) + ": operators live on different spaces");
}

} // namespace

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
    require_same_space(a, b, "operator+");
    return {a.n_particles, a.d, a.m + b.m};
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
    require_same_space(a, b, "operator-");
    return {a.n_particles, a.d, a.m - b.m};
}

DenseOperator operator*(std::complex<double> c, const DenseOperator& a) {
    return {a.n_particles, a.d, c * a.m};
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    require_same_space(a, b, "operator*");
    return {a.n_particles, a.d, a.m * b.m};
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
    if (a.d != b.d) throw argument_error("tensor: one-particle dimensions differ");
    check_capacity(a.d, a.n_particles + b.n_particles);
    const Eigen::Index ra = a.m.rows(), rb = b.m.rows();
    Eigen::MatrixXcd out(ra * rb, ra * rb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ra; ++j)
            out.block(i * rb, j * rb, rb, rb) = a.m(i, j) * b.m;
    return {a.n_particles + b.n_particles, a.d, std::move(out)};
}

namespace {

// decode flat index into per-particle digits, particle 1 most significant
void decode(Eigen::Index flat, int n, int d, std::vector<int>& digits) {
    for (int k = n - 1; k >= 0; --k) {
        digits[static_cast<std::size_t>(k)] = static_cast<int>(flat % d);
        flat /= d;
    }
}

Eigen::Index encode(const std::vector<int>& digits, int d) {
    Eigen::Index flat = 0;
    for (int digit : digits) flat = flat * d + digit;
    return flat;
}

} // namespace

DenseOperator partial_trace(const DenseOperator& a, const LabelSet& keep) {
    const int n = a.n_particles, d = a.d;
    for (int pos : keep)
        if (pos < 1 || pos > n) throw argument_error("partial_trace: position out of range");
    const int k = keep.size();
    std::vector<int> traced;
    for (int pos = 1; pos <= n; ++pos)
        if (!keep.contains(pos)) traced.push_back(pos);

    const Eigen::Index out_dim = pow_dim(d, k);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
    const Eigen::Index tr_count = pow_dim(d, n - k);

    std::vector<int> row_digits(static_cast<std::size_t>(n));
    std::vector<int> col_digits(static_cast<std::size_t>(n));
    std::vector<int> kd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k)),
        td(static_cast<std::size_t>(n - k));
    for (Eigen::Index r = 0; r < out_dim; ++r) {
        decode(r, k, d, kd);
        for (Eigen::Index c = 0; c < out_dim; ++c) {
            decode(c, k, d, cd);
            std::complex<double> acc = 0.0;
            for (Eigen::Index t = 0; t < tr_count; ++t) {
                decode(t, n - k, d, td);
                for (int i = 0; i < k; ++i) {
                    row_digits[static_cast<std::size_t>(keep[i] - 1)] = kd[static_cast<std::size_t>(i)];
                    col_digits[static_cast<std::size_t>(keep[i] - 1)] = cd[static_cast<std::size_t>(i)];
                }
                for (std::size_t i = 0; i < td.size(); ++i) {
                    row_digits[static_cast<std::size_t>(traced[i] - 1)] = td[i];
                    col_digits[static_cast<std::size_t>(traced[i] - 1)] = td[i];
                }
                acc += a.m(encode(row_digits, d), encode(col_digits, d));
            }
            out(r, c) = acc;
        }
    }
    return {k, d, std::move(out)};
}

double trace_norm(const DenseOperator& a) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.m);
    return svd.singularValues().sum();
}

double operator_norm(const DenseOperator& a) {
    if (a.m.rows() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.m);
    return svd.singularValues()(0);
}

namespace {

struct EigDecomp {
    Eigen::MatrixXcd basis_matrix; // the operator this decomposition belongs to
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};

// Cache keyed by a byte hash of the Hamiltonian matrix; hit verification
// compares the stored matrix so hash collisions stay harmless.
class EigCache {
public:
    std::shared_ptr<const EigDecomp> get(const Eigen::MatrixXcd& h) {
        const std::uint64_t key = hash_bytes(h);
        {
            std::shared_lock lock(mutex_);
            auto range = map_.equal_range(key);
            for (auto it = range.first; it != range.second; ++it)
                if (it->second->basis_matrix == h) return it->second;
        }
        auto entry = std::make_shared<EigDecomp>();
        entry->basis_matrix = h;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        entry->eigenvalues = es.eigenvalues();
        entry->eigenvectors = es.eigenvectors();
        {
            std::unique_lock lock(mutex_);
            auto range = map_.equal_range(key);
            for (auto it = range.first; it != range.second; ++it)
                if (it->second->basis_matrix == h) return it->second; // raced, reuse
            map_.emplace(key, entry);
        }
        return entry;
    }

private:
    static std::uint64_t hash_bytes(const Eigen::MatrixXcd& h) {
        const auto* bytes = reinterpret_cast<const unsigned char*>(h.data());
        const std::size_t nbytes =
            static_cast<std::size_t>(h.size()) * sizeof(std::complex<double>);
        std::uint64_t acc = 1469598103934665603ull; // FNV-1a
        for (std::size_t i = 0; i < nbytes; ++i) {
            acc ^= bytes[i];
            acc *= 1099511628211ull;
        }
        return acc ^ static_cast<std::uint64_t>(h.rows());
    }

    std::shared_mutex mutex_;
    std::unordered_multimap<std::uint64_t, std::shared_ptr<const EigDecomp>> map_;
};

EigCache& eig_cache() {
    static EigCache cache;
    return cache;
}

} // namespace

DenseOperator conjugate_by_group(const DenseOperator& h, double t, const DenseOperator& x,
                                 Direction direction) {
    require_same_space(h, x, "conjugate_by_group");
    if (!h.is_hermitian(1e-10))
        throw argument_error("conjugate_by_group: generator is not Hermitian within 1e-10");
    auto eig = eig_cache().get(h.m);
    const double theta = (direction == Direction::Forward) ? t : -t;
    Eigen::VectorXcd phases(eig->eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(std::complex<double>(0.0, theta * eig->eigenvalues(i)));
    // U = V diag(e^{i theta lambda}) V^dagger, result = U x U^dagger
    Eigen::MatrixXcd u = eig->eigenvectors * phases.asDiagonal() * eig->eigenvectors.adjoint();
    return {x.n_particles, x.d, u * x.m * u.adjoint()};
}

DenseOperator permutation_operator(int n_particles, int d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n_particles)
        throw argument_error("permutation_operator: wrong permutation length");
    check_capacity(d, n_particles);
    const Eigen::Index dim = pow_dim(d, n_particles);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> in(static_cast<std::size_t>(n_particles)),
        out(static_cast<std::size_t>(n_particles));
    for (Eigen::Index col = 0; col < dim; ++col) {
        decode(col, n_particles, d, in);
        for (int k = 0; k < n_particles; ++k)
            out[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] =
                in[static_cast<std::size_t>(k)];
        p(encode(out, d), col) = 1.0;
    }
    return {n_particles, d, std::move(p)};
}

bool is_permutation_symmetric(const DenseOperator& a, double tol) {
    for (int i = 0; i + 1 < a.n_particles; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(a.n_particles));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        DenseOperator p = permutation_operator(a.n_particles, a.d, perm);
        if ((p.m * a.m * p.m.adjoint() - a.m).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

DenseOperator symmetrizer(int n_particles, int d, Statistics stat) {
    check_capacity(d, n_particles);
    if (n_particles > 6) throw capacity_error("symmetrizer: n > 6");
    const Eigen::Index dim = pow_dim(d, n_particles);
    if (stat == Statistics::MaxwellBoltzmann)
        return DenseOperator::identity(n_particles, d);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> perm(static_cast<std::size_t>(n_particles));
    std::iota(perm.begin(), perm.end(), 0);
    double count = 0;
    do {
        // parity of the permutation
        int transpositions = 0;
        std::vector<bool> visited(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (visited[i]) continue;
            int cycle_len = 0;
            std::size_t j = i;
            while (!visited[j]) {
                visited[j] = true;
                j = static_cast<std::size_t>(perm[j]);
                ++cycle_len;
            }
            transpositions += cycle_len - 1;
        }
        const double sign =
            (stat == Statistics::Fermi && transpositions % 2 == 1) ? -1.0 : 1.0;
        acc += sign * permutation_operator(n_particles, d, perm).m;
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {n_particles, d, acc / count};
}

DenseOperator embed(const DenseOperator& op, const LabelSet& positions, int n_particles) {
    if (positions.size() != op.n_particles)
        throw argument_error("embed: |positions| must equal the operator's particle count");
    for (int pos : positions)
        if (pos < 1 || pos > n_particles) throw argument_error("embed: position out of range");
    check_capacity(op.d, n_particles);

    const int d = op.d, k = op.n_particles;
    std::vector<int> rest;
    for (int pos = 1; pos <= n_particles; ++pos)
        if (!positions.contains(pos)) rest.push_back(pos);

    const Eigen::Index dim = pow_dim(d, n_particles);
    const Eigen::Index op_dim = pow_dim(d, k);
    const Eigen::Index rest_count = pow_dim(d, n_particles - k);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);

    std::vector<int> rd(static_cast<std::size_t>(k)), cd(static_cast<std::size_t>(k)),
        xd(static_cast<std::size_t>(n_particles - k));
    std::vector<int> row_digits(static_cast<std::size_t>(n_particles));
    std::vector<int> col_digits(static_cast<std::size_t>(n_particles));
    for (Eigen::Index r = 0; r < op_dim; ++r) {
        decode(r, k, d, rd);
        for (Eigen::Index c = 0; c < op_dim; ++c) {
            decode(c, k, d, cd);
            const std::complex<double> val = op.m(r, c);
            if (val == 0.0) continue;
            for (Eigen::Index x = 0; x < rest_count; ++x) {
                decode(x, n_particles - k, d, xd);
                for (int i = 0; i < k; ++i) {
                    row_digits[static_cast<std::size_t>(positions[i] - 1)] = rd[static_cast<std::size_t>(i)];
                    col_digits[static_cast<std::size_t>(positions[i] - 1)] = cd[static_cast<std::size_t>(i)];
                }
                for (std::size_t i = 0; i < xd.size(); ++i) {
                    row_digits[static_cast<std::size_t>(rest[i] - 1)] = xd[i];
                    col_digits[static_cast<std::size_t>(rest[i] - 1)] = xd[i];
                }
                out(encode(row_digits, d), encode(col_digits, d)) = val;
            }
        }
    }
    return {n_particles, d, std::move(out)};
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
    require_same_space(a, b, "max_abs_diff");
    if (a.m.rows() == 0) return 0.0;
    return (a.m - b.m).cwiseAbs().maxCoeff();
}

} // namespace hierlab
