// three_level.hpp — Six tracked density-matrix components of the
// {|0g>,|0e>,|1g>} (Red) / {|0g>,|0e>,|1e>} (Blue) truncation, their
// equations of motion, and the closed-form weak-probe susceptibilities

#pragma once

#include <array>

#include "ionspec/params.hpp"

namespace ionspec {

// Tracked components, in the order the equations of motion are written:
//   Red:  rho_0g0g, rho_0g0e, rho_0g1g, rho_0e0e, rho_0e1g, rho_1g1g
//   Blue: rho_0g0g, rho_0g0e, rho_1e0g, rho_1e0e, rho_0e0e, rho_1e1e
// Conjugate partners (rho_0e0g, ...) are derived on the fly, never stored.
struct SixState {
    Sideband sideband = Sideband::Red;
    std::array<Complex, 6> components{};

    // Population sum for the case's ordering.
    Complex trace() const;
};

// Time derivatives of the tracked components under the truncated master
// equation at nbar = 0.
SixState red_rhs(const SixState& state, const ModelParams& p, double delta);
SixState blue_rhs(const SixState& state, const ModelParams& p, double delta);

// chi = chi' + i chi'' represented by rho_0g0e / (i epsilon), in units
// of 1/gamma; chi'' is proportional to the absorption coefficient and
// chi' to the dispersion.
struct Susceptibility {
    double chi_prime = 0.0;
    double chi_double_prime = 0.0;
};

Susceptibility susceptibility_from_coherence(Complex rho_0g0e, double epsilon);

// Closed-form steady-state coherence over i*epsilon:
//   Red:  (i d - kappa)           / (i [(i d - gamma/2)(i d - kappa) + g^2])
//   Blue: (i d - 3 kappa - gamma) / (i [(i d - 2 kappa - gamma/2)(i d - 3 kappa - gamma) + g^2])
Susceptibility red_susceptibility(const ModelParams& p, double delta);
Susceptibility blue_susceptibility(const ModelParams& p, double delta);

// First order in epsilon: clamps rho_0g0g = 1, zeroes the other populations
// and second-order coherences, and solves the remaining 2x2 linear system
// for (rho_0g0e, rho_0g1g) [Red] or (rho_0g0e, rho_1e0e) [Blue]. Equal to
// the closed form as an algebraic identity. Returns rho_0g0e.
Complex weak_probe_solve(Sideband sideband, const ModelParams& p, double delta);

// Fixed-step RK4 from the all-population-in-one-level initial condition
// (Red: |0g>, Blue: |0e>). dt <= 0 picks 1e-2 over the fastest rate.
SixState integrate_truncated(Sideband sideband, const ModelParams& p, double delta,
                             double t_final, double dt = 0.0);

} // namespace ionspec
