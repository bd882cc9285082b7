// spectra.hpp — Detuning sweeps, dip/peak metrics, pole classification

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ionspec/dynamics.hpp"
#include "ionspec/three_level.hpp"

namespace ionspec {

enum class Method { ClosedForm, TruncatedOde, FullLindblad };

const char* to_string(Method m);
Method method_from_string(const std::string& name);

struct SweepConfig {
    double delta_min = -2.0; // units of gamma
    double delta_max = 2.0;
    int n_points = 801;      // uniform grid, endpoints included
    Method method = Method::ClosedForm;
    int n_max = 3;           // Fock cutoff for FullLindblad
    bool allow_blue_full = false;
    double t_final = 500.0;  // TruncatedOde horizon, units of 1/gamma
};

// Throws ValidationError naming the offending key.
void validate(const SweepConfig& config);

struct SpectrumPoint {
    double delta = 0.0;
    double chi_prime = 0.0;
    double chi_double_prime = 0.0;
    std::optional<Diagnostics> diagnostics; // FullLindblad only
};

struct SpectrumResult {
    ModelParams params;
    SweepConfig config;
    std::vector<SpectrumPoint> points; // sorted by delta
};

// chi at every grid point via the selected route:
//   ClosedForm   — analytic weak-probe steady state
//   TruncatedOde — Red: six-component RK4 to t_final; Blue: weak-probe solve
//                  (the literal Blue system decays to zero, so its steady
//                  state only exists under the weak-probe clamp)
//   FullLindblad — dense steady state of the full truncated Liouvillian
// Solver errors are rethrown with the offending delta attached.
SpectrumResult sweep(const ModelParams& p, const SweepConfig& config);

struct DipMetrics {
    double center_absorption = 0.0;     // chi'' at delta = 0
    double baseline = 0.0;              // max chi'' over the grid
    double dip_depth = 0.0;             // baseline - center_absorption
    double dip_half_width = 0.0;        // half-width of the region around 0
                                        // where chi'' <= (center+baseline)/2,
                                        // by linear interpolation; 0 if no dip
    std::vector<double> peak_positions; // deltas of interior local maxima
};

DipMetrics dip_metrics(const SpectrumResult& spectrum);

enum class Regime { Overdamped, Critical, Underdamped };

const char* to_string(Regime r);

// Roots in s = i*delta of the susceptibility denominator,
//   Red:  (s - gamma/2)(s - kappa) + g^2
//   Blue: (s - 2 kappa - gamma/2)(s - 3 kappa - gamma) + g^2.
// Underdamped (complex pair) marks a resolved dressed doublet; the regime
// follows the sign of the discriminant with a 1e-12 critical band.
struct PoleStructure {
    Regime regime = Regime::Overdamped;
    std::array<Complex, 2> roots{};
    double threshold_coupling = 0.0; // |damping-constant difference| / 2
};

PoleStructure pole_structure(Sideband sideband, const ModelParams& p);

} // namespace ionspec
