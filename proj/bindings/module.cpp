// module.cpp — Python bindings for the main ionspec operations

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ionspec/commands.hpp"
#include "ionspec/dynamics.hpp"
#include "ionspec/errors.hpp"
#include "ionspec/operators.hpp"
#include "ionspec/spectra.hpp"
#include "ionspec/three_level.hpp"

namespace py = pybind11;
using namespace ionspec;

PYBIND11_MODULE(ionspec, m) {
    m.doc() = "Weak-probe absorption spectra of a sideband-driven trapped two-level ion";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::enum_<Sideband>(m, "Sideband")
        .value("Red", Sideband::Red)
        .value("Blue", Sideband::Blue);
    py::enum_<Method>(m, "Method")
        .value("ClosedForm", Method::ClosedForm)
        .value("TruncatedOde", Method::TruncatedOde)
        .value("FullLindblad", Method::FullLindblad);
    py::enum_<Regime>(m, "Regime")
        .value("Overdamped", Regime::Overdamped)
        .value("Critical", Regime::Critical)
        .value("Underdamped", Regime::Underdamped);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("gamma", &ModelParams::gamma)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def_readwrite("nbar", &ModelParams::nbar)
        .def_readwrite("eta", &ModelParams::eta)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("epsilon", &ModelParams::epsilon)
        .def_readwrite("sideband", &ModelParams::sideband)
        .def_property_readonly("coupling", &ModelParams::coupling);
    m.def("validate", [](const ModelParams& p) { return validate(p); },
          "raises on a hard violation, returns the warning list");

    py::class_<HilbertSpace>(m, "HilbertSpace")
        .def_readonly("n_max", &HilbertSpace::n_max)
        .def_readonly("dim", &HilbertSpace::dim)
        .def("index", &HilbertSpace::index, py::arg("n"), py::arg("s"));
    m.def("make_space", &make_space, py::arg("n_max"));

    py::class_<CanonicalOperators>(m, "CanonicalOperators")
        .def_readonly("a", &CanonicalOperators::a)
        .def_readonly("a_dag", &CanonicalOperators::a_dag)
        .def_readonly("sigma_z", &CanonicalOperators::sigma_z)
        .def_readonly("sigma_plus", &CanonicalOperators::sigma_plus)
        .def_readonly("sigma_minus", &CanonicalOperators::sigma_minus);
    m.def("canonical_operators", &canonical_operators);

    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"), py::arg("space"),
          py::arg("delta"));
    m.def("build_probe", &build_probe, py::arg("params"), py::arg("space"));

    py::class_<Dissipator>(m, "Dissipator")
        .def(py::init([](Matrix jump_op, double rate) {
                 return Dissipator{std::move(jump_op), rate};
             }),
             py::arg("jump_op"), py::arg("rate"))
        .def_readonly("jump_op", &Dissipator::jump_op)
        .def_readonly("rate", &Dissipator::rate);
    m.def("dissipators_for", &dissipators_for, py::arg("params"), py::arg("space"));

    py::class_<Liouvillian>(m, "Liouvillian")
        .def_readonly("dim", &Liouvillian::dim)
        .def_readonly("sideband", &Liouvillian::sideband)
        .def_readonly("matrix", &Liouvillian::matrix);
    m.def("build_liouvillian", &build_liouvillian, py::arg("hamiltonian"),
          py::arg("dissipators"), py::arg("sideband") = Sideband::Red);
    m.def("make_liouvillian", &make_liouvillian, py::arg("params"), py::arg("space"),
          py::arg("delta"));

    py::class_<Diagnostics>(m, "Diagnostics")
        .def_readonly("trace_error", &Diagnostics::trace_error)
        .def_readonly("hermiticity_error", &Diagnostics::hermiticity_error)
        .def_readonly("min_eigenvalue", &Diagnostics::min_eigenvalue)
        .def_readonly("mean_phonon", &Diagnostics::mean_phonon)
        .def_readonly("top_level_population", &Diagnostics::top_level_population);
    m.def("diagnose", &diagnose, py::arg("rho"));
    m.def("expectation", &expectation, py::arg("op"), py::arg("rho"));
    m.def("default_time_step", &default_time_step, py::arg("params"), py::arg("delta"));

    py::class_<EvolveResult>(m, "EvolveResult")
        .def_readonly("rho", &EvolveResult::rho)
        .def_readonly("diagnostics", &EvolveResult::diagnostics);
    m.def("evolve", &evolve, py::arg("liouvillian"), py::arg("rho0"), py::arg("t_final"),
          py::arg("dt"));

    py::class_<SteadyStateResult>(m, "SteadyStateResult")
        .def_readonly("rho", &SteadyStateResult::rho)
        .def_readonly("diagnostics", &SteadyStateResult::diagnostics)
        .def_readonly("residual", &SteadyStateResult::residual);
    m.def(
        "steady_state",
        [](const Liouvillian& L, bool allow_blue, int trace_row) {
            SteadyStateOptions opts;
            opts.allow_blue = allow_blue;
            opts.trace_row = trace_row;
            return steady_state(L, opts);
        },
        py::arg("liouvillian"), py::arg("allow_blue") = false, py::arg("trace_row") = 0);

    py::class_<SixState>(m, "SixState")
        .def(py::init([](Sideband sideband, std::array<Complex, 6> components) {
                 return SixState{sideband, components};
             }),
             py::arg("sideband"), py::arg("components"))
        .def_readwrite("sideband", &SixState::sideband)
        .def_readwrite("components", &SixState::components)
        .def("trace", &SixState::trace);
    m.def("red_rhs", &red_rhs, py::arg("state"), py::arg("params"), py::arg("delta"));
    m.def("blue_rhs", &blue_rhs, py::arg("state"), py::arg("params"), py::arg("delta"));

    py::class_<Susceptibility>(m, "Susceptibility")
        .def_readonly("chi_prime", &Susceptibility::chi_prime)
        .def_readonly("chi_double_prime", &Susceptibility::chi_double_prime);
    m.def("susceptibility_from_coherence", &susceptibility_from_coherence,
          py::arg("rho_0g0e"), py::arg("epsilon"));
    m.def("red_susceptibility", &red_susceptibility, py::arg("params"), py::arg("delta"));
    m.def("blue_susceptibility", &blue_susceptibility, py::arg("params"), py::arg("delta"));
    m.def("weak_probe_solve", &weak_probe_solve, py::arg("sideband"), py::arg("params"),
          py::arg("delta"));
    m.def("integrate_truncated", &integrate_truncated, py::arg("sideband"), py::arg("params"),
          py::arg("delta"), py::arg("t_final"), py::arg("dt") = 0.0);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("delta_min", &SweepConfig::delta_min)
        .def_readwrite("delta_max", &SweepConfig::delta_max)
        .def_readwrite("n_points", &SweepConfig::n_points)
        .def_readwrite("method", &SweepConfig::method)
        .def_readwrite("n_max", &SweepConfig::n_max)
        .def_readwrite("allow_blue_full", &SweepConfig::allow_blue_full)
        .def_readwrite("t_final", &SweepConfig::t_final);

    py::class_<SpectrumPoint>(m, "SpectrumPoint")
        .def_readonly("delta", &SpectrumPoint::delta)
        .def_readonly("chi_prime", &SpectrumPoint::chi_prime)
        .def_readonly("chi_double_prime", &SpectrumPoint::chi_double_prime)
        .def_readonly("diagnostics", &SpectrumPoint::diagnostics);
    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("params", &SpectrumResult::params)
        .def_readonly("config", &SpectrumResult::config)
        .def_readonly("points", &SpectrumResult::points);
    m.def("sweep", &sweep, py::arg("params"), py::arg("config"));

    py::class_<DipMetrics>(m, "DipMetrics")
        .def_readonly("center_absorption", &DipMetrics::center_absorption)
        .def_readonly("baseline", &DipMetrics::baseline)
        .def_readonly("dip_depth", &DipMetrics::dip_depth)
        .def_readonly("dip_half_width", &DipMetrics::dip_half_width)
        .def_readonly("peak_positions", &DipMetrics::peak_positions);
    m.def("dip_metrics", &dip_metrics, py::arg("spectrum"));

    py::class_<PoleStructure>(m, "PoleStructure")
        .def_readonly("regime", &PoleStructure::regime)
        .def_readonly("roots", &PoleStructure::roots)
        .def_readonly("threshold_coupling", &PoleStructure::threshold_coupling);
    m.def("pole_structure", &pole_structure, py::arg("sideband"), py::arg("params"));

    m.def("spectrum_csv", &spectrum_csv, py::arg("spectrum"));
    m.def(
        "reproduce_figure",
        [](const std::string& figure, const std::filesystem::path& out_dir) {
            const auto out = cmd_reproduce(figure, out_dir);
            return std::make_pair(out.curve_files, out.manifest);
        },
        py::arg("figure"), py::arg("out_dir"));
}
