#include "ionspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ionspec/errors.hpp"

namespace ionspec {

namespace {

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

double top_level_population_of(const Matrix& rho) {
    const auto dim = rho.rows();
    return rho(dim - 2, dim - 2).real() + rho(dim - 1, dim - 1).real();
}

void check_state(const Matrix& rho, double t) {
    if (!rho.allFinite())
        throw SolverError("evolve: state turned non-finite at t = " + str(t));
    const double top = top_level_population_of(rho);
    if (top > kFockLeakThreshold)
        throw SolverError("evolve: population " + str(top) +
                          " at the Fock cutoff exceeds " + str(kFockLeakThreshold) +
                          " at t = " + str(t) +
                          "; raise n_max (the Blue gain channel reaches the cutoff by design)");
}

} // namespace

Diagnostics diagnose(const Matrix& rho) {
    const auto dim = rho.rows();
    if (dim == 0 || rho.cols() != dim)
        throw ValidationError("diagnose: state must be a nonempty square matrix");
    if (dim % 2 != 0)
        throw ValidationError("diagnose: dimension must be even (phonon x qubit basis)");

    Diagnostics d;
    d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
    d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const Matrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    double nsum = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) nsum += double(k / 2) * rho(k, k).real();
    d.mean_phonon = nsum;
    d.top_level_population = top_level_population_of(rho);
    return d;
}

Complex expectation(const Matrix& op, const Matrix& rho) {
    if (op.rows() != rho.rows() || op.cols() != rho.cols() || op.rows() != op.cols())
        throw ValidationError("expectation: operator and state dimensions must agree");
    return (op * rho).trace();
}

double default_time_step(const ModelParams& p, double delta) {
    const double scale =
        std::max({p.gamma, p.kappa, p.coupling(), std::abs(delta), 1.0});
    return 1e-3 / scale;
}

EvolveResult evolve(const Liouvillian& L, const Matrix& rho0, double t_final, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ValidationError("dt: integration step must be > 0");
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw ValidationError("t_final: evolution time must be >= 0");
    if (rho0.rows() != L.dim || rho0.cols() != L.dim)
        throw ValidationError("rho0: dimension does not match the Liouvillian");

    Matrix rho = rho0;
    check_state(rho, 0.0);
    const long n_steps = long(std::ceil(t_final / dt - 1e-12));
    if (n_steps > 0) {
        const double h = t_final / double(n_steps);
        const Matrix& m = L.matrix;
        Vector x = vec(rho);
        for (long step = 0; step < n_steps; ++step) {
            const Vector k1 = m * x;
            const Vector k2 = m * (x + (0.5 * h) * k1);
            const Vector k3 = m * (x + (0.5 * h) * k2);
            const Vector k4 = m * (x + h * k3);
            x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            rho = unvec(x, L.dim);
            rho = 0.5 * (rho + rho.adjoint().eval());
            check_state(rho, double(step + 1) * h);
            x = vec(rho);
        }
    }
    return EvolveResult{rho, diagnose(rho)};
}

SteadyStateResult steady_state(const Liouvillian& L, const SteadyStateOptions& opts) {
    const int dim = L.dim;
    const Eigen::Index n = Eigen::Index(dim) * dim;
    if (dim < 2 || L.matrix.rows() != n || L.matrix.cols() != n)
        throw ValidationError("liouvillian: matrix must be dim^2 x dim^2 with dim >= 2");
    if (opts.trace_row < 0 || Eigen::Index(opts.trace_row) >= n)
        throw ValidationError("trace_row: must lie in [0, dim^2)");
    if (L.sideband == Sideband::Blue && !opts.allow_blue)
        throw SolverError(
            "steady_state: the blue-sideband generator has no phonon-loss channel at nbar = 0 "
            "and its truncated steady state is a Fock-cutoff artifact; pass allow_blue "
            "(--allow-blue-full) to solve anyway");

    // Null-space dimension must be exactly one for tr(rho) = 1 to pin a state.
    Eigen::BDCSVD<Matrix> svd(L.matrix);
    const auto& sv = svd.singularValues();
    Eigen::Index nullity = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) <= opts.rank_tol) ++nullity;
    if (nullity == 0)
        throw SolverError("steady_state: Liouvillian null space is empty within tolerance " +
                          str(opts.rank_tol));
    if (nullity > 1)
        throw SolverError("steady_state: steady-state manifold is degenerate (null-space dimension " +
                          std::to_string(nullity) + ")");

    Matrix m = L.matrix;
    m.row(opts.trace_row).setZero();
    for (int k = 0; k < dim; ++k) m(opts.trace_row, Eigen::Index(k) * (dim + 1)) = 1.0;
    Vector b = Vector::Zero(n);
    b(opts.trace_row) = 1.0;
    const Vector x = m.partialPivLu().solve(b);

    const Matrix rho = unvec(x, dim);
    const double residual = (L.matrix * x).cwiseAbs().maxCoeff();
    if (!(residual <= opts.residual_tol))
        throw SolverError("steady_state: residual " + str(residual) +
                          " exceeds tolerance " + str(opts.residual_tol));

    const Diagnostics diag = diagnose(rho);
    if (diag.hermiticity_error > 1e-10 || diag.trace_error > 1e-10 ||
        diag.min_eigenvalue < -1e-8)
        throw SolverError("steady_state: solution violates density-matrix invariants "
                          "(hermiticity " + str(diag.hermiticity_error) +
                          ", trace error " + str(diag.trace_error) +
                          ", min eigenvalue " + str(diag.min_eigenvalue) + ")");
    return SteadyStateResult{rho, diag, residual};
}

} // namespace ionspec
