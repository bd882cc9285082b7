// dynamics.hpp — Master-equation integration, steady states, state audits

#pragma once

#include "ionspec/operators.hpp"

namespace ionspec {

// Population allowed at the n = n_max levels before the truncation is
// declared untrustworthy.
constexpr double kFockLeakThreshold = 1e-3;

struct Diagnostics {
    double trace_error = 0.0;          // |tr(rho) - 1|
    double hermiticity_error = 0.0;    // max |rho - rho†| entry
    double min_eigenvalue = 0.0;       // of the hermitized state
    double mean_phonon = 0.0;          // tr(a_dag a rho)
    double top_level_population = 0.0; // total population at n = n_max
};

Diagnostics diagnose(const Matrix& rho);

// tr(op * rho)
Complex expectation(const Matrix& op, const Matrix& rho);

// Default integration step: keeps the fastest rate at 1e-3 per step.
double default_time_step(const ModelParams& p, double delta);

struct EvolveResult {
    Matrix rho;
    Diagnostics diagnostics;
};

// Classical fixed-step RK4 on vec(rho-dot) = L vec(rho); the state is
// re-symmetrized each step. Raises SolverError if the population at the
// Fock cutoff exceeds kFockLeakThreshold at any step (the Blue gain
// channel gets there quickly) or if the state turns non-finite.
EvolveResult evolve(const Liouvillian& L, const Matrix& rho0, double t_final, double dt);

struct SteadyStateOptions {
    bool allow_blue = false; // override the Blue-sideband gate
    // Row of L replaced by the trace constraint. Must carry a nonzero
    // component of the left null vector, which for a trace-preserving
    // generator is vec(identity): pick a diagonal row k*(dim+1). Any other
    // choice leaves a singular system and fails the residual check.
    int trace_row = 0;
    double residual_tol = 1e-10;
    double rank_tol = 1e-8;  // singular values below this count as null space
};

struct SteadyStateResult {
    Matrix rho;
    Diagnostics diagnostics; // top_level_population is always reported here
    double residual = 0.0;   // max |L vec(rho)| entry
};

// Solves L vec(rho) = 0 subject to tr(rho) = 1 by dense LU after replacing
// one row with the trace constraint. Verifies the null space is
// one-dimensional (SVD rank) and that the result is a physical density
// matrix; raises SolverError otherwise. Blue-tagged generators are refused
// unless allow_blue is set, because their truncated steady state piles
// population at the cutoff.
SteadyStateResult steady_state(const Liouvillian& L, const SteadyStateOptions& opts = {});

} // namespace ionspec
