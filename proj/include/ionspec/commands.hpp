// commands.hpp — The operations behind the CLI verbs

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ionspec/io.hpp"

namespace ionspec {

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& name);

struct RunConfig {
    ModelParams params;
    SweepConfig sweep;
    double delta = 0.0;    // probe detuning for steady / evolve
    double t_final = 50.0; // evolve horizon, units of 1/gamma
    double dt = 0.0;       // evolve step; <= 0 picks the default
    int samples = 200;     // evolve output rows
    double tol = 0.01;     // compare threshold on relative chi'' deviation
    std::string out;       // output file (directory for reproduce); empty = stdout
    OutputFormat format = OutputFormat::Csv;
};

// Runs the sweep and writes the artifact (CSV rows or JSON document).
SpectrumResult cmd_spectrum(const RunConfig& config);

// Emits one CSV per curve of the named figure data set plus a JSON manifest
// with the resolved parameters and dip metrics. Figures: fig2a (Red,
// omega sweep), fig2b (Red, kappa sweep), fig3 (Blue, omega sweep).
struct ReproduceOutput {
    std::vector<std::filesystem::path> curve_files;
    std::filesystem::path manifest;
};
ReproduceOutput cmd_reproduce(const std::string& figure, const std::filesystem::path& out_dir);

// Full time evolution from |0g><0g| at the configured detuning; writes a
// time series of populations, the probe coherence and state diagnostics.
EvolveResult cmd_evolve(const RunConfig& config);

// Steady state at a single detuning; writes one spectrum row (CSV) or the
// point plus diagnostics (JSON).
struct SteadyPoint {
    Susceptibility chi;
    SteadyStateResult solution;
};
SteadyPoint cmd_steady(const RunConfig& config);

// Pole-structure classification of the susceptibility denominator.
PoleStructure cmd_classify(const RunConfig& config);

// Runs the closed form against the other routes on one parameter set and
// reports the maximum relative chi'' deviation per route. Blue compares
// ClosedForm against the weak-probe TruncatedOde path only.
struct CompareReport {
    double max_rel_deviation_ode = 0.0;
    double max_rel_deviation_full = 0.0; // -1 when not run (Blue)
    bool within_tol = true;
    nlohmann::json report;
};
CompareReport cmd_compare(const RunConfig& config);

} // namespace ionspec
