#include "ionspec/operators.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "ionspec/errors.hpp"

namespace ionspec {

namespace {
constexpr Complex kI{0.0, 1.0};
}

HilbertSpace make_space(int n_max) {
    if (n_max < 1)
        throw ValidationError("n_max: must be >= 1, the space has to hold the one-phonon states");
    return HilbertSpace{n_max, 2 * (n_max + 1)};
}

CanonicalOperators canonical_operators(const HilbertSpace& space) {
    const int dim = space.dim;
    CanonicalOperators ops;
    ops.a = Matrix::Zero(dim, dim);
    ops.sigma_z = Matrix::Zero(dim, dim);
    ops.sigma_plus = Matrix::Zero(dim, dim);
    ops.sigma_minus = Matrix::Zero(dim, dim);
    for (int n = 0; n <= space.n_max; ++n) {
        for (int s = 0; s < 2; ++s) {
            const int k = space.index(n, s);
            if (n >= 1) ops.a(space.index(n - 1, s), k) = std::sqrt(double(n));
            ops.sigma_z(k, k) = s == 1 ? 1.0 : -1.0;
        }
        ops.sigma_plus(space.index(n, 1), space.index(n, 0)) = 1.0;
        ops.sigma_minus(space.index(n, 0), space.index(n, 1)) = 1.0;
    }
    ops.a_dag = ops.a.adjoint();
    return ops;
}

Matrix build_hamiltonian(const ModelParams& p, const HilbertSpace& space, double delta) {
    validate(p);
    if (!std::isfinite(delta))
        throw ValidationError("delta: detuning must be finite");
    const auto ops = canonical_operators(space);
    const double g = p.coupling();
    Matrix h = 0.5 * delta * ops.sigma_z;
    if (p.sideband == Sideband::Red) {
        h += delta * (ops.a_dag * ops.a);
        h += kI * g * (ops.sigma_plus * ops.a - ops.sigma_minus * ops.a_dag);
    } else {
        h -= delta * (ops.a_dag * ops.a);
        h += kI * g * (ops.sigma_plus * ops.a_dag - ops.sigma_minus * ops.a);
    }
    return h;
}

Matrix build_probe(const ModelParams& p, const HilbertSpace& space) {
    validate(p);
    if (p.epsilon <= 0.0)
        throw ValidationError("epsilon: probe coupling requires epsilon > 0");
    const auto ops = canonical_operators(space);
    return kI * p.epsilon * (ops.sigma_minus - ops.sigma_plus);
}

std::vector<Dissipator> dissipators_for(const ModelParams& p, const HilbertSpace& space) {
    validate(p);
    const auto ops = canonical_operators(space);
    if (p.sideband == Sideband::Red)
        return {{ops.a, p.kappa * (p.nbar + 1.0)},
                {ops.a_dag, p.kappa * p.nbar},
                {ops.sigma_minus, 0.5 * p.gamma}};
    return {{ops.a_dag, p.kappa * (p.nbar + 1.0)},
            {ops.a, p.kappa * p.nbar},
            {ops.sigma_minus, 0.5 * p.gamma}};
}

Liouvillian build_liouvillian(const Matrix& hamiltonian,
                              const std::vector<Dissipator>& dissipators,
                              Sideband sideband) {
    const auto dim = hamiltonian.rows();
    if (dim == 0 || hamiltonian.cols() != dim)
        throw ValidationError("hamiltonian: must be a nonempty square matrix");
    const Matrix id = Matrix::Identity(dim, dim);

    Matrix l = -kI * (Eigen::kroneckerProduct(id, hamiltonian).eval() -
                      Eigen::kroneckerProduct(hamiltonian.transpose(), id).eval());
    for (const auto& d : dissipators) {
        if (d.jump_op.rows() != dim || d.jump_op.cols() != dim)
            throw ValidationError("dissipator: jump operator dimension mismatch");
        if (!std::isfinite(d.rate) || d.rate < 0.0)
            throw ValidationError("dissipator: rate must be finite and >= 0");
        const Matrix ldl = d.jump_op.adjoint() * d.jump_op;
        l += d.rate *
             (2.0 * Eigen::kroneckerProduct(d.jump_op.conjugate(), d.jump_op).eval() -
              Eigen::kroneckerProduct(id, ldl).eval() -
              Eigen::kroneckerProduct(ldl.transpose(), id).eval());
    }
    return Liouvillian{int(dim), sideband, std::move(l)};
}

Liouvillian make_liouvillian(const ModelParams& p, const HilbertSpace& space, double delta) {
    Matrix h = build_hamiltonian(p, space, delta);
    if (p.epsilon > 0.0) h += build_probe(p, space);
    return build_liouvillian(h, dissipators_for(p, space), p.sideband);
}

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int dim) {
    if (v.size() != Eigen::Index(dim) * dim)
        throw ValidationError("unvec: vector length does not match dim^2, dim = " +
                              std::to_string(dim));
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

} // namespace ionspec
