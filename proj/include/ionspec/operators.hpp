// operators.hpp — Truncated phonon (x) qubit space, canonical operators,
// sideband Hamiltonians, and the Lindblad superoperator

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ionspec/params.hpp"

namespace ionspec {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Joint basis |n, s> with phonon-major ordering: index = 2n + s, where
// s = 0 is the internal ground state |g>, s = 1 the excited state |e>,
// and n = 0 .. n_max is the phonon number.
struct HilbertSpace {
    int n_max = 3;
    int dim = 8; // 2 * (n_max + 1)

    int index(int n, int s) const { return 2 * n + s; }
};

// n_max >= 1: the space must at least hold the one-phonon states.
HilbertSpace make_space(int n_max);

struct CanonicalOperators {
    Matrix a;           // a|n,s> = sqrt(n)|n-1,s>, truncated at n_max
    Matrix a_dag;
    Matrix sigma_z;     // |e><e| - |g><g| on the qubit factor
    Matrix sigma_plus;  // |e><g|
    Matrix sigma_minus; // |g><e|
};

CanonicalOperators canonical_operators(const HilbertSpace& space);

// Control-dressed Hamiltonian at probe detuning delta (units of gamma):
//   Red:  delta/2 sigma_z + delta a_dag a + i g (sigma_+ a     - sigma_- a_dag)
//   Blue: delta/2 sigma_z - delta a_dag a + i g (sigma_+ a_dag - sigma_- a)
// with g = eta * omega / 2.
Matrix build_hamiltonian(const ModelParams& p, const HilbertSpace& space, double delta);

// Probe coupling i epsilon (sigma_- - sigma_+); Hermitian, added to H.
// Requires epsilon > 0.
Matrix build_probe(const ModelParams& p, const HilbertSpace& space);

// One Lindblad channel, contributing rate * (2 L rho L† - L†L rho - rho L†L)
// to rho-dot. Note the factor-2 convention: rate is half the Gamma of the
// usual (L rho L† - {L†L, rho}/2) form.
struct Dissipator {
    Matrix jump_op;
    double rate = 0.0;
};

// Red:  (a, kappa (nbar+1)), (a_dag, kappa nbar), (sigma_-, gamma/2)
// Blue: (a_dag, kappa (nbar+1)), (a, kappa nbar), (sigma_-, gamma/2)
// All three channels are always returned, zero rates included.
std::vector<Dissipator> dissipators_for(const ModelParams& p, const HilbertSpace& space);

// dim^2 x dim^2 generator acting on column-stacked density matrices.
// The sideband tag gates the steady-state solver: the Blue channel set
// pumps phonons toward the Fock cutoff, so its truncated steady state is
// an artifact unless explicitly requested.
struct Liouvillian {
    int dim = 0;
    Sideband sideband = Sideband::Red;
    Matrix matrix;
};

Liouvillian build_liouvillian(const Matrix& hamiltonian,
                              const std::vector<Dissipator>& dissipators,
                              Sideband sideband = Sideband::Red);

// Full generator for the given parameters: sideband Hamiltonian plus probe
// plus dissipators.
Liouvillian make_liouvillian(const ModelParams& p, const HilbertSpace& space, double delta);

// Column stacking and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int dim);

} // namespace ionspec
