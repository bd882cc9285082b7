#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "ionspec/commands.hpp"
#include "ionspec/errors.hpp"

using namespace ionspec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ionspec_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("number formatting carries 12 significant digits") {
    CHECK(format_number(1.0) == "1.00000000000e+00");
    CHECK(format_number(0.02 / 0.17) == "1.17647058824e-01");
    CHECK(format_number(-2.0) == "-2.00000000000e+00");
    CHECK(format_number(1e-300) == "1.00000000000e-300");
}

TEST_CASE("csv layout and determinism") {
    ModelParams p;
    SweepConfig grid;
    grid.n_points = 101;
    const SpectrumResult s = sweep(p, grid);

    const std::string first = spectrum_csv(s);
    const std::string second = spectrum_csv(sweep(p, grid));
    CHECK(first == second);

    std::istringstream lines(first);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "delta,chi_prime,chi_double_prime");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == grid.n_points);
}

TEST_CASE("json artifact round trips at full precision") {
    ModelParams p;
    p.omega = 16.0;
    SweepConfig grid;
    grid.n_points = 21;
    grid.method = Method::FullLindblad;
    const SpectrumResult s = sweep(p, grid);

    const nlohmann::json doc = nlohmann::json::parse(to_json(s).dump());
    CHECK(doc.at("schema_version").get<std::string>() == "1");
    CHECK(doc.at("params").at("omega").get<double>() == p.omega);
    CHECK(doc.at("params").at("epsilon").get<double>() == p.epsilon);
    CHECK(doc.at("config").at("n_points").get<int>() == grid.n_points);
    REQUIRE(doc.at("points").size() == size_t(grid.n_points));
    for (size_t i = 0; i < s.points.size(); ++i) {
        const auto& j = doc.at("points").at(i);
        CHECK(j.at("delta").get<double>() == s.points[i].delta);
        CHECK(j.at("chi_prime").get<double>() == s.points[i].chi_prime);
        CHECK(j.at("chi_double_prime").get<double>() == s.points[i].chi_double_prime);
        CHECK(j.at("diagnostics").at("top_level_population").get<double>() ==
              s.points[i].diagnostics->top_level_population);
    }
}

TEST_CASE("cmd_spectrum writes the selected format") {
    TempDir tmp;
    RunConfig config;
    config.sweep.n_points = 11;
    config.out = (tmp.path / "s.csv").string();
    cmd_spectrum(config);
    const std::string csv = slurp(tmp.path / "s.csv");
    CHECK(csv.rfind("delta,chi_prime,chi_double_prime\n", 0) == 0);

    config.format = OutputFormat::Json;
    config.out = (tmp.path / "s.json").string();
    cmd_spectrum(config);
    const auto doc = nlohmann::json::parse(slurp(tmp.path / "s.json"));
    CHECK(doc.at("points").size() == 11);
}

TEST_CASE("cmd_reproduce emits curves plus a manifest") {
    TempDir tmp;
    const auto out = cmd_reproduce("fig2a", tmp.path);
    REQUIRE(out.curve_files.size() == 3);
    for (const auto& f : out.curve_files) CHECK(fs::exists(f));

    const auto manifest = nlohmann::json::parse(slurp(out.manifest));
    CHECK(manifest.at("figure") == "fig2a");
    REQUIRE(manifest.at("curves").size() == 3);
    const auto omegas = std::array{2.0, 8.0, 16.0};
    const auto centers = std::array{1.0, 0.02 / 0.17, 0.02 / 0.65};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(manifest.at("curves").at(i).at("params").at("omega").get<double>() == omegas[i]);
        CHECK(std::abs(manifest.at("curves").at(i)
                           .at("dip_metrics")
                           .at("center_absorption")
                           .get<double>() -
                       centers[i]) <= 1e-9);
    }

    CHECK_THROWS_AS(cmd_reproduce("fig9", tmp.path), ValidationError);
}

TEST_CASE("cmd_compare reports deviations and honors the tolerance") {
    TempDir tmp;
    RunConfig config;
    config.sweep.n_points = 21;
    config.out = (tmp.path / "cmp.json").string();

    SUBCASE("weak probe passes at 1%") {
        const auto report = cmd_compare(config);
        CHECK(report.within_tol);
        CHECK(report.max_rel_deviation_ode <= 0.01);
        CHECK(report.max_rel_deviation_full <= 0.01);
        const auto doc = nlohmann::json::parse(slurp(tmp.path / "cmp.json"));
        CHECK(doc.at("within_tol").get<bool>());
        CHECK(doc.at("methods").contains("full_lindblad"));
    }

    SUBCASE("strong probe breaks the weak-probe formula") {
        config.params.epsilon = 0.3;
        const auto report = cmd_compare(config);
        CHECK(!report.within_tol);
        CHECK(report.max_rel_deviation_full > 0.01);
    }

    SUBCASE("deviation grows with the probe strength") {
        double last = 0.0;
        for (const double eps : {1e-3, 0.05, 0.15, 0.3}) {
            config.params.epsilon = eps;
            const auto report = cmd_compare(config);
            CHECK(report.max_rel_deviation_full > last);
            last = report.max_rel_deviation_full;
        }
    }

    SUBCASE("blue runs the identity pair only") {
        config.params.sideband = Sideband::Blue;
        config.params.omega = 15.0;
        config.sweep.delta_min = -5.0;
        config.sweep.delta_max = 5.0;
        config.tol = 1e-9;
        const auto report = cmd_compare(config);
        CHECK(report.within_tol);
        CHECK(report.max_rel_deviation_ode <= 1e-9);
        CHECK(report.max_rel_deviation_full == -1.0);
        const auto doc = nlohmann::json::parse(slurp(tmp.path / "cmp.json"));
        CHECK(!doc.at("methods").contains("full_lindblad"));
    }
}

TEST_CASE("cmd_steady and cmd_classify single-point artifacts") {
    TempDir tmp;
    RunConfig config;
    config.format = OutputFormat::Json;

    config.out = (tmp.path / "steady.json").string();
    const auto point = cmd_steady(config);
    CHECK(std::abs(point.chi.chi_double_prime - 0.02 / 0.17) <= 0.01 * (0.02 / 0.17));
    const auto steady_doc = nlohmann::json::parse(slurp(tmp.path / "steady.json"));
    CHECK(steady_doc.at("diagnostics").contains("top_level_population"));

    config.out = (tmp.path / "classify.json").string();
    const auto ps = cmd_classify(config);
    CHECK(ps.regime == Regime::Underdamped);
    const auto classify_doc = nlohmann::json::parse(slurp(tmp.path / "classify.json"));
    CHECK(classify_doc.at("pole_structure").at("regime") == "underdamped");
}

TEST_CASE("cmd_evolve time series") {
    TempDir tmp;
    RunConfig config;
    config.t_final = 5.0;
    config.samples = 10;
    config.sweep.n_max = 3;
    config.out = (tmp.path / "evolve.csv").string();
    const auto result = cmd_evolve(config);
    CHECK(result.diagnostics.trace_error <= 1e-9);

    std::istringstream lines(slurp(tmp.path / "evolve.csv"));
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("t,pop_0g,pop_0e", 0) == 0);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == config.samples + 1);

    config.format = OutputFormat::Json;
    config.out = (tmp.path / "evolve.json").string();
    cmd_evolve(config);
    const auto doc = nlohmann::json::parse(slurp(tmp.path / "evolve.json"));
    CHECK(doc.at("rows").size() == size_t(config.samples + 1));
    CHECK(doc.at("rows").at(0).at("pop_0g").get<double>() == 1.0);
    CHECK(doc.at("final_diagnostics").at("trace_error").get<double>() <= 1e-9);
}
