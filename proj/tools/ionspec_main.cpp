// ionspec_main.cpp — Command-line front end: sweeps, figure data sets,
// time evolution, steady states, pole classification, method comparison

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ionspec/commands.hpp"
#include "ionspec/errors.hpp"

namespace {

struct CliOptions {
    std::string sideband = "red";
    std::string method = "closed-form";
    std::string format = "csv";
    std::string figure;
    std::string out;
    long seed = 0;
    ionspec::RunConfig run;
};

void print_warnings(const ionspec::ModelParams& params) {
    for (const auto& w : ionspec::validate(params)) std::cerr << "warning: " << w << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ionspec — weak-probe absorption spectra of a sideband-driven trapped ion"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat `key = value` file; command-line flags override it");

    CliOptions opt;
    auto& run = opt.run;

    // Model parameters (units of gamma throughout).
    app.add_option("--case", opt.sideband, "sideband case: red | blue")
        ->capture_default_str();
    app.add_option("--kappa", run.params.kappa, "motional heating rate")
        ->capture_default_str();
    app.add_option("--nbar", run.params.nbar, "mean thermal phonon number")
        ->capture_default_str();
    app.add_option("--eta", run.params.eta, "Lamb-Dicke parameter")->capture_default_str();
    app.add_option("--omega", run.params.omega, "control Rabi frequency")
        ->capture_default_str();
    app.add_option("--epsilon", run.params.epsilon, "probe Rabi frequency")
        ->capture_default_str();

    // Sweep grid and computation route.
    app.add_option("--method", opt.method,
                   "computation route: closed-form | truncated-ode | full-lindblad")
        ->capture_default_str();
    app.add_option("--delta-min", run.sweep.delta_min, "grid start (units of gamma)")
        ->capture_default_str();
    app.add_option("--delta-max", run.sweep.delta_max, "grid end")->capture_default_str();
    app.add_option("--points", run.sweep.n_points, "grid size")->capture_default_str();
    app.add_option("--nmax", run.sweep.n_max, "Fock cutoff for the full Liouvillian")
        ->capture_default_str();
    app.add_option("--ode-t-final", run.sweep.t_final,
                   "integration horizon of the truncated-ode route")
        ->capture_default_str();
    app.add_flag("--allow-blue-full", run.sweep.allow_blue_full,
                 "override the blue-sideband steady-state gate");

    // Single-point and evolution controls.
    app.add_option("--delta", run.delta, "probe detuning for steady/evolve")
        ->capture_default_str();
    app.add_option("--t-final", run.t_final, "evolution time for evolve")
        ->capture_default_str();
    app.add_option("--dt", run.dt, "integration step for evolve (<= 0 picks a default)");
    app.add_option("--samples", run.samples, "number of evolve output intervals")
        ->capture_default_str();
    app.add_option("--tol", run.tol, "compare: allowed relative chi'' deviation")
        ->capture_default_str();

    app.add_option("--out", opt.out, "output file (directory for reproduce); default stdout");
    app.add_option("--format", opt.format, "artifact format: csv | json")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "reserved; no stochastic paths exist");

    auto* spectrum = app.add_subcommand("spectrum", "sweep the probe detuning grid");
    auto* reproduce = app.add_subcommand("reproduce", "emit a bundled figure data set");
    reproduce->add_option("figure", opt.figure, "fig2a | fig2b | fig3")->required();
    auto* evolve = app.add_subcommand("evolve", "integrate the master equation from |0g>");
    auto* steady = app.add_subcommand("steady", "steady state at a single detuning");
    auto* classify = app.add_subcommand("classify", "pole structure of the susceptibility");
    auto* compare = app.add_subcommand("compare", "closed form vs the numerical routes");
    for (auto* sub : {spectrum, reproduce, evolve, steady, classify, compare})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        run.params.sideband = ionspec::sideband_from_string(opt.sideband);
        run.sweep.method = ionspec::method_from_string(opt.method);
        run.format = ionspec::format_from_string(opt.format);
        run.out = opt.out;
        ionspec::validate(run.params); // reject bad numbers before any compute
        print_warnings(run.params);

        if (*spectrum) {
            ionspec::cmd_spectrum(run);
        } else if (*reproduce) {
            const auto made =
                ionspec::cmd_reproduce(opt.figure, opt.out.empty() ? "." : opt.out);
            for (const auto& f : made.curve_files) std::cerr << "wrote " << f.string() << '\n';
            std::cerr << "wrote " << made.manifest.string() << '\n';
        } else if (*evolve) {
            ionspec::cmd_evolve(run);
        } else if (*steady) {
            ionspec::cmd_steady(run);
        } else if (*classify) {
            ionspec::cmd_classify(run);
        } else if (*compare) {
            const auto report = ionspec::cmd_compare(run);
            if (!report.within_tol) {
                std::cerr << "compare: deviation exceeds tol = " << run.tol << '\n';
                return 1;
            }
        }
    } catch (const ionspec::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ionspec::SolverError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
