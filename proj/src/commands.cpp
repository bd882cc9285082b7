#include "ionspec/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ionspec/errors.hpp"

namespace ionspec {

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SolverError("cannot open output file '" + path + "'");
    f << content;
    f.flush();
    if (!f) throw SolverError("failed writing output file '" + path + "'");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string short_value(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

struct CurveSpec {
    std::string label;
    ModelParams params;
};

struct FigureSpec {
    std::string name;
    SweepConfig grid;
    std::vector<CurveSpec> curves;
};

// Curve families behind the `reproduce` verb: the red-sideband omega and
// kappa sweeps and the blue-sideband omega sweep, eta = 0.1, gamma/kappa = 50
// unless the sweep varies kappa itself.
FigureSpec figure_spec(const std::string& figure) {
    ModelParams base; // gamma 1, kappa 0.02, nbar 0, eta 0.1, epsilon 1e-3
    SweepConfig grid; // [-2, 2] x 801, closed form
    FigureSpec spec{figure, grid, {}};
    if (figure == "fig2a") {
        for (double omega : {2.0, 8.0, 16.0}) {
            ModelParams p = base;
            p.omega = omega;
            spec.curves.push_back({"omega_" + short_value(omega), p});
        }
    } else if (figure == "fig2b") {
        for (double kappa : {0.02, 0.1, 0.2}) {
            ModelParams p = base;
            p.omega = 8.0;
            p.kappa = kappa;
            spec.curves.push_back({"kappa_" + short_value(kappa), p});
        }
    } else if (figure == "fig3") {
        spec.grid.delta_min = -5.0;
        spec.grid.delta_max = 5.0;
        spec.grid.n_points = 2001;
        for (double omega : {15.0, 25.0, 45.0}) {
            ModelParams p = base;
            p.sideband = Sideband::Blue;
            p.omega = omega;
            spec.curves.push_back({"omega_" + short_value(omega), p});
        }
    } else {
        throw ValidationError("figure: expected 'fig2a', 'fig2b' or 'fig3', got '" + figure +
                              "'");
    }
    return spec;
}

double max_abs_chi_double_prime(const SpectrumResult& s) {
    double peak = 0.0;
    for (const auto& pt : s.points) peak = std::max(peak, std::abs(pt.chi_double_prime));
    return peak;
}

double max_rel_deviation(const SpectrumResult& reference, const SpectrumResult& other) {
    const double peak = std::max(max_abs_chi_double_prime(reference), 1e-300);
    double dev = 0.0;
    for (size_t i = 0; i < reference.points.size(); ++i)
        dev = std::max(dev, std::abs(other.points[i].chi_double_prime -
                                     reference.points[i].chi_double_prime) /
                                peak);
    return dev;
}

} // namespace

OutputFormat format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ValidationError("format: expected 'csv' or 'json', got '" + name + "'");
}

SpectrumResult cmd_spectrum(const RunConfig& config) {
    SpectrumResult result = sweep(config.params, config.sweep);
    write_output(config.out, config.format == OutputFormat::Csv ? spectrum_csv(result)
                                                                : dump(to_json(result)));
    return result;
}

ReproduceOutput cmd_reproduce(const std::string& figure,
                              const std::filesystem::path& out_dir) {
    const FigureSpec spec = figure_spec(figure);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw SolverError("cannot create output directory '" + out_dir.string() + "'");

    ReproduceOutput out;
    nlohmann::json manifest = {{"schema_version", kSchemaVersion},
                               {"figure", spec.name},
                               {"config", to_json(spec.grid)},
                               {"curves", nlohmann::json::array()}};
    for (const auto& curve : spec.curves) {
        const SpectrumResult result = sweep(curve.params, spec.grid);
        const std::filesystem::path file = out_dir / (spec.name + "_" + curve.label + ".csv");
        write_output(file.string(), spectrum_csv(result));
        out.curve_files.push_back(file);
        manifest["curves"].push_back({{"file", file.filename().string()},
                                      {"params", to_json(curve.params)},
                                      {"dip_metrics", to_json(dip_metrics(result))}});
    }
    out.manifest = out_dir / (spec.name + "_manifest.json");
    write_output(out.manifest.string(), dump(manifest));
    return out;
}

EvolveResult cmd_evolve(const RunConfig& config) {
    validate(config.params);
    if (!(config.t_final >= 0.0) || !std::isfinite(config.t_final))
        throw ValidationError("t-final: must be >= 0");
    if (config.samples < 1) throw ValidationError("samples: must be >= 1");
    if (!std::isfinite(config.delta)) throw ValidationError("delta: must be finite");

    const HilbertSpace space = make_space(config.sweep.n_max);
    const Liouvillian L = make_liouvillian(config.params, space, config.delta);
    const double dt =
        config.dt > 0.0 ? config.dt : default_time_step(config.params, config.delta);

    Matrix rho = Matrix::Zero(space.dim, space.dim);
    rho(0, 0) = 1.0; // |0g><0g|

    const double chunk = config.t_final / double(config.samples);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream csv;
    csv << "t,pop_0g,pop_0e,pop_1g,pop_1e,re_rho_0g0e,im_rho_0g0e,mean_phonon,"
           "trace_error,top_level_population\n";
    EvolveResult last{rho, diagnose(rho)};
    for (int k = 0; k <= config.samples; ++k) {
        const double t = chunk * double(k);
        if (k > 0) last = evolve(L, last.rho, chunk, dt);
        const Diagnostics& d = last.diagnostics;
        const Matrix& r = last.rho;
        csv << format_number(t) << ',' << format_number(r(0, 0).real()) << ','
            << format_number(r(1, 1).real()) << ',' << format_number(r(2, 2).real()) << ','
            << format_number(r(3, 3).real()) << ',' << format_number(r(0, 1).real()) << ','
            << format_number(r(0, 1).imag()) << ',' << format_number(d.mean_phonon) << ','
            << format_number(d.trace_error) << ',' << format_number(d.top_level_population)
            << '\n';
        rows.push_back({{"t", t},
                        {"pop_0g", r(0, 0).real()},
                        {"pop_0e", r(1, 1).real()},
                        {"pop_1g", r(2, 2).real()},
                        {"pop_1e", r(3, 3).real()},
                        {"re_rho_0g0e", r(0, 1).real()},
                        {"im_rho_0g0e", r(0, 1).imag()},
                        {"diagnostics", to_json(d)}});
    }
    if (config.format == OutputFormat::Csv) {
        write_output(config.out, csv.str());
    } else {
        write_output(config.out, dump({{"schema_version", kSchemaVersion},
                                       {"params", to_json(config.params)},
                                       {"delta", config.delta},
                                       {"t_final", config.t_final},
                                       {"dt", dt},
                                       {"n_max", config.sweep.n_max},
                                       {"rows", std::move(rows)},
                                       {"final_diagnostics", to_json(last.diagnostics)}}));
    }
    return last;
}

SteadyPoint cmd_steady(const RunConfig& config) {
    validate(config.params);
    if (!std::isfinite(config.delta)) throw ValidationError("delta: must be finite");
    if (!(config.params.epsilon > 0.0))
        throw ValidationError("epsilon: the steady-state susceptibility requires epsilon > 0");

    const HilbertSpace space = make_space(config.sweep.n_max);
    const Liouvillian L = make_liouvillian(config.params, space, config.delta);
    SteadyStateOptions opts;
    opts.allow_blue = config.sweep.allow_blue_full;
    SteadyPoint point{{}, steady_state(L, opts)};
    point.chi = susceptibility_from_coherence(point.solution.rho(0, 1), config.params.epsilon);

    if (config.format == OutputFormat::Csv) {
        std::ostringstream csv;
        csv << "delta,chi_prime,chi_double_prime\n"
            << format_number(config.delta) << ',' << format_number(point.chi.chi_prime) << ','
            << format_number(point.chi.chi_double_prime) << '\n';
        write_output(config.out, csv.str());
    } else {
        write_output(config.out,
                     dump({{"schema_version", kSchemaVersion},
                           {"params", to_json(config.params)},
                           {"delta", config.delta},
                           {"n_max", config.sweep.n_max},
                           {"chi_prime", point.chi.chi_prime},
                           {"chi_double_prime", point.chi.chi_double_prime},
                           {"residual", point.solution.residual},
                           {"diagnostics", to_json(point.solution.diagnostics)}}));
    }
    return point;
}

PoleStructure cmd_classify(const RunConfig& config) {
    const PoleStructure ps = pole_structure(config.params.sideband, config.params);
    if (config.format == OutputFormat::Csv) {
        std::ostringstream csv;
        csv << "regime,root1_re,root1_im,root2_re,root2_im,threshold_coupling\n"
            << to_string(ps.regime) << ',' << format_number(ps.roots[0].real()) << ','
            << format_number(ps.roots[0].imag()) << ',' << format_number(ps.roots[1].real())
            << ',' << format_number(ps.roots[1].imag()) << ','
            << format_number(ps.threshold_coupling) << '\n';
        write_output(config.out, csv.str());
    } else {
        write_output(config.out, dump({{"schema_version", kSchemaVersion},
                                       {"params", to_json(config.params)},
                                       {"pole_structure", to_json(ps)}}));
    }
    return ps;
}

CompareReport cmd_compare(const RunConfig& config) {
    if (!(config.tol > 0.0) || !std::isfinite(config.tol))
        throw ValidationError("tol: comparison tolerance must be > 0");

    SweepConfig grid = config.sweep;
    grid.method = Method::ClosedForm;
    const SpectrumResult closed = sweep(config.params, grid);
    grid.method = Method::TruncatedOde;
    const SpectrumResult ode = sweep(config.params, grid);

    CompareReport report;
    report.max_rel_deviation_ode = max_rel_deviation(closed, ode);
    report.max_rel_deviation_full = -1.0;

    nlohmann::json methods = {{"closed_form", to_json(closed)["points"]},
                              {"truncated_ode", to_json(ode)["points"]}};
    nlohmann::json deviations = {{"truncated_ode", report.max_rel_deviation_ode}};

    // The blue-sideband full-Lindblad steady state is a truncation artifact,
    // so only the red case runs all three routes.
    if (config.params.sideband == Sideband::Red) {
        grid.method = Method::FullLindblad;
        const SpectrumResult full = sweep(config.params, grid);
        report.max_rel_deviation_full = max_rel_deviation(closed, full);
        methods["full_lindblad"] = to_json(full)["points"];
        deviations["full_lindblad"] = report.max_rel_deviation_full;
    }

    report.within_tol = report.max_rel_deviation_ode <= config.tol &&
                        (report.max_rel_deviation_full < 0.0 ||
                         report.max_rel_deviation_full <= config.tol);
    report.report = {{"schema_version", kSchemaVersion},
                     {"params", to_json(config.params)},
                     {"config", to_json(config.sweep)},
                     {"tol", config.tol},
                     {"peak_chi_double_prime", max_abs_chi_double_prime(closed)},
                     {"max_rel_deviation", std::move(deviations)},
                     {"within_tol", report.within_tol},
                     {"methods", std::move(methods)}};
    write_output(config.out, dump(report.report));
    return report;
}

} // namespace ionspec
