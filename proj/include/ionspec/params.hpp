// params.hpp — Physical rates and couplings of the driven trapped ion

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace ionspec {

using Complex = std::complex<double>;

// Which motional sideband the control laser is tuned to. Red produces a
// Jaynes-Cummings coupling (sigma_+ a), Blue the anti-Jaynes-Cummings one
// (sigma_+ a_dag).
enum class Sideband { Red, Blue };

const char* to_string(Sideband s);
Sideband sideband_from_string(const std::string& name);

// All rates and frequencies are dimensionless multiples of the spontaneous
// emission rate gamma, which is pinned to 1 (and hbar = 1).
struct ModelParams {
    double gamma = 1.0;    // spontaneous emission rate, the base unit
    double kappa = 0.02;   // motional heating rate
    double nbar = 0.0;     // mean thermal phonon number
    double eta = 0.1;      // Lamb-Dicke parameter
    double omega = 8.0;    // control Rabi frequency
    double epsilon = 1e-3; // probe Rabi frequency
    Sideband sideband = Sideband::Red;

    // Effective sideband coupling g = eta * omega / 2.
    double coupling() const { return 0.5 * eta * omega; }
};

// Throws ValidationError on a hard violation, naming the offending key.
// Returns soft warnings: the Lamb-Dicke and weak-probe conditions are
// advisory and never rejected.
std::vector<std::string> validate(const ModelParams& p);

} // namespace ionspec
