#include "ionspec/spectra.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>

#include "ionspec/errors.hpp"

namespace ionspec {

const char* to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::TruncatedOde: return "truncated-ode";
        case Method::FullLindblad: return "full-lindblad";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "closed-form") return Method::ClosedForm;
    if (name == "truncated-ode") return Method::TruncatedOde;
    if (name == "full-lindblad") return Method::FullLindblad;
    throw ValidationError("method: expected 'closed-form', 'truncated-ode' or "
                          "'full-lindblad', got '" + name + "'");
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Overdamped: return "overdamped";
        case Regime::Critical: return "critical";
        case Regime::Underdamped: return "underdamped";
    }
    return "?";
}

void validate(const SweepConfig& config) {
    if (!std::isfinite(config.delta_min) || !std::isfinite(config.delta_max) ||
        config.delta_min >= config.delta_max)
        throw ValidationError("delta-min/delta-max: need finite delta_min < delta_max");
    if (config.n_points < 2)
        throw ValidationError("points: grid needs at least 2 points");
    if (config.n_max < 1)
        throw ValidationError("nmax: Fock cutoff must be >= 1");
    if (!(config.t_final > 0.0) || !std::isfinite(config.t_final))
        throw ValidationError("t-final: integration horizon must be > 0");
}

SpectrumResult sweep(const ModelParams& p, const SweepConfig& config) {
    validate(p);
    validate(config);
    if (!(p.epsilon > 0.0))
        throw ValidationError("epsilon: sweeping chi = rho_0g0e/(i epsilon) requires epsilon > 0");
    if (p.sideband == Sideband::Blue && config.method == Method::FullLindblad &&
        !config.allow_blue_full)
        throw SolverError(
            "sweep: full-lindblad on the blue sideband is gated; the truncated steady state "
            "piles population at the Fock cutoff (pass --allow-blue-full to override)");

    SpectrumResult result{p, config, {}};
    result.points.reserve(size_t(config.n_points));
    const double step = (config.delta_max - config.delta_min) / double(config.n_points - 1);

    HilbertSpace space;
    if (config.method == Method::FullLindblad) space = make_space(config.n_max);

    for (int i = 0; i < config.n_points; ++i) {
        const double delta = config.delta_min + double(i) * step;
        SpectrumPoint point;
        point.delta = delta;
        try {
            switch (config.method) {
                case Method::ClosedForm: {
                    const Susceptibility chi = p.sideband == Sideband::Red
                                                   ? red_susceptibility(p, delta)
                                                   : blue_susceptibility(p, delta);
                    point.chi_prime = chi.chi_prime;
                    point.chi_double_prime = chi.chi_double_prime;
                    break;
                }
                case Method::TruncatedOde: {
                    // The literal Blue six-component system decays to zero,
                    // so its steady state only exists under the weak-probe
                    // clamp; Red is integrated to its genuine steady state.
                    const Complex coherence =
                        p.sideband == Sideband::Red
                            ? integrate_truncated(Sideband::Red, p, delta, config.t_final)
                                  .components[1]
                            : weak_probe_solve(Sideband::Blue, p, delta);
                    const Susceptibility chi =
                        susceptibility_from_coherence(coherence, p.epsilon);
                    point.chi_prime = chi.chi_prime;
                    point.chi_double_prime = chi.chi_double_prime;
                    break;
                }
                case Method::FullLindblad: {
                    const Liouvillian L = make_liouvillian(p, space, delta);
                    SteadyStateOptions opts;
                    opts.allow_blue = config.allow_blue_full;
                    const SteadyStateResult ss = steady_state(L, opts);
                    const Susceptibility chi =
                        susceptibility_from_coherence(ss.rho(0, 1), p.epsilon);
                    point.chi_prime = chi.chi_prime;
                    point.chi_double_prime = chi.chi_double_prime;
                    point.diagnostics = ss.diagnostics;
                    break;
                }
            }
        } catch (const SolverError& e) {
            char head[48];
            std::snprintf(head, sizeof head, "at delta = %g: ", delta);
            throw SolverError(head + std::string(e.what()));
        }
        result.points.push_back(std::move(point));
    }
    return result;
}

DipMetrics dip_metrics(const SpectrumResult& spectrum) {
    const auto& pts = spectrum.points;
    if (pts.size() < 3)
        throw ValidationError("dip_metrics: need at least 3 spectrum points");

    size_t center = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (std::abs(pts[i].delta) < std::abs(pts[center].delta)) center = i;
    const double step = (pts.back().delta - pts.front().delta) / double(pts.size() - 1);
    if (std::abs(pts[center].delta) > 0.5 * step + 1e-12)
        throw ValidationError("dip_metrics: grid does not include delta = 0");

    DipMetrics m;
    m.center_absorption = pts[center].chi_double_prime;
    m.baseline = pts[0].chi_double_prime;
    for (const auto& pt : pts) m.baseline = std::max(m.baseline, pt.chi_double_prime);
    m.dip_depth = m.baseline - m.center_absorption;

    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        if (pts[i].chi_double_prime > pts[i - 1].chi_double_prime &&
            pts[i].chi_double_prime > pts[i + 1].chi_double_prime)
            m.peak_positions.push_back(pts[i].delta);
    }
    if (m.peak_positions.empty())
        throw SolverError("dip_metrics: no interior local maxima found (flat spectrum)");

    if (m.dip_depth <= 1e-12 * std::max(m.baseline, 1.0)) {
        m.dip_half_width = 0.0;
        return m;
    }

    // Walk outward from the center until chi'' exceeds the half-depth level,
    // interpolating the crossing; the grid edge bounds a one-sided dip.
    const double level = 0.5 * (m.center_absorption + m.baseline);
    const auto crossing = [&](long dir) {
        long i = long(center);
        while (i + dir >= 0 && i + dir < long(pts.size())) {
            const auto& here = pts[size_t(i)];
            const auto& next = pts[size_t(i + dir)];
            if (next.chi_double_prime > level) {
                const double slope = next.chi_double_prime - here.chi_double_prime;
                const double frac = slope != 0.0 ? (level - here.chi_double_prime) / slope : 1.0;
                return here.delta + frac * (next.delta - here.delta);
            }
            i += dir;
        }
        return pts[dir > 0 ? pts.size() - 1 : 0].delta;
    };
    m.dip_half_width = 0.5 * (crossing(+1) - crossing(-1));
    return m;
}

PoleStructure pole_structure(Sideband sideband, const ModelParams& p) {
    validate(p);
    const double g = p.coupling();
    double damping_a, damping_b;
    if (sideband == Sideband::Red) {
        damping_a = 0.5 * p.gamma;
        damping_b = p.kappa;
    } else {
        damping_a = 2.0 * p.kappa + 0.5 * p.gamma;
        damping_b = 3.0 * p.kappa + p.gamma;
    }

    PoleStructure ps;
    ps.threshold_coupling = 0.5 * std::abs(damping_a - damping_b);
    const double sum = damping_a + damping_b;
    const double disc = (damping_a - damping_b) * (damping_a - damping_b) - 4.0 * g * g;
    if (std::abs(disc) <= 1e-12) {
        ps.regime = Regime::Critical;
        ps.roots = {Complex{0.5 * sum, 0.0}, Complex{0.5 * sum, 0.0}};
    } else if (disc > 0.0) {
        ps.regime = Regime::Overdamped;
        const double root = std::sqrt(disc);
        ps.roots = {Complex{0.5 * (sum - root), 0.0}, Complex{0.5 * (sum + root), 0.0}};
    } else {
        ps.regime = Regime::Underdamped;
        const double root = std::sqrt(-disc);
        ps.roots = {Complex{0.5 * sum, -0.5 * root}, Complex{0.5 * sum, 0.5 * root}};
    }
    return ps;
}

} // namespace ionspec
