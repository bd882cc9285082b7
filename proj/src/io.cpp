#include "ionspec/io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace ionspec {

const char* const kSchemaVersion = "1";

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

void write_spectrum_csv(const SpectrumResult& spectrum, std::ostream& out) {
    out << "delta,chi_prime,chi_double_prime\n";
    for (const auto& pt : spectrum.points)
        out << format_number(pt.delta) << ',' << format_number(pt.chi_prime) << ','
            << format_number(pt.chi_double_prime) << '\n';
}

std::string spectrum_csv(const SpectrumResult& spectrum) {
    std::ostringstream out;
    write_spectrum_csv(spectrum, out);
    return out.str();
}

nlohmann::json to_json(const ModelParams& p) {
    return {{"gamma", p.gamma},     {"kappa", p.kappa},
            {"nbar", p.nbar},       {"eta", p.eta},
            {"omega", p.omega},     {"epsilon", p.epsilon},
            {"case", to_string(p.sideband)}};
}

nlohmann::json to_json(const SweepConfig& config) {
    return {{"delta_min", config.delta_min},
            {"delta_max", config.delta_max},
            {"n_points", config.n_points},
            {"method", to_string(config.method)},
            {"n_max", config.n_max},
            {"allow_blue_full", config.allow_blue_full},
            {"t_final", config.t_final}};
}

nlohmann::json to_json(const Diagnostics& d) {
    return {{"trace_error", d.trace_error},
            {"hermiticity_error", d.hermiticity_error},
            {"min_eigenvalue", d.min_eigenvalue},
            {"mean_phonon", d.mean_phonon},
            {"top_level_population", d.top_level_population}};
}

nlohmann::json to_json(const DipMetrics& m) {
    return {{"center_absorption", m.center_absorption},
            {"baseline", m.baseline},
            {"dip_depth", m.dip_depth},
            {"dip_half_width", m.dip_half_width},
            {"peak_positions", m.peak_positions}};
}

nlohmann::json to_json(const PoleStructure& ps) {
    return {{"regime", to_string(ps.regime)},
            {"roots", {{{"re", ps.roots[0].real()}, {"im", ps.roots[0].imag()}},
                       {{"re", ps.roots[1].real()}, {"im", ps.roots[1].imag()}}}},
            {"threshold_coupling", ps.threshold_coupling}};
}

nlohmann::json to_json(const SpectrumResult& spectrum) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : spectrum.points) {
        nlohmann::json j = {{"delta", pt.delta},
                            {"chi_prime", pt.chi_prime},
                            {"chi_double_prime", pt.chi_double_prime}};
        if (pt.diagnostics) j["diagnostics"] = to_json(*pt.diagnostics);
        points.push_back(std::move(j));
    }
    return {{"schema_version", kSchemaVersion},
            {"params", to_json(spectrum.params)},
            {"config", to_json(spectrum.config)},
            {"points", std::move(points)}};
}

} // namespace ionspec
