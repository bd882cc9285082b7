#include "ionspec/three_level.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Dense>

#include "ionspec/errors.hpp"

namespace ionspec {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kDegenerateDenominator = 1e-300;

std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

void require_case(const SixState& state, Sideband expected, const char* op) {
    if (state.sideband != expected)
        throw ValidationError(std::string(op) + ": state is tagged " +
                              to_string(state.sideband) + ", expected " + to_string(expected));
}

bool all_finite(const std::array<Complex, 6>& c) {
    for (const auto& z : c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

} // namespace

Complex SixState::trace() const {
    if (sideband == Sideband::Red)
        return components[0] + components[3] + components[5];
    return components[0] + components[4] + components[5];
}

SixState red_rhs(const SixState& state, const ModelParams& p, double delta) {
    require_case(state, Sideband::Red, "red_rhs");
    const auto& x = state.components;
    const double g = p.coupling();
    const double gamma = p.gamma;
    const double kappa = p.kappa;
    const double eps = p.epsilon;
    const Complex id = kI * delta;

    SixState dot{Sideband::Red, {}};
    auto& d = dot.components;
    d[0] = gamma * x[3] + 2.0 * kappa * x[5] + eps * (std::conj(x[1]) + x[1]);
    d[1] = (id - 0.5 * gamma) * x[1] + g * x[2] - eps * (x[0] - x[3]);
    d[2] = (id - kappa) * x[2] - g * x[1] + eps * x[4];
    d[3] = -gamma * x[3] + g * (x[4] + std::conj(x[4])) - eps * (x[1] + std::conj(x[1]));
    d[4] = -(kappa + 0.5 * gamma) * x[4] - eps * x[2] + g * (x[5] - x[3]);
    d[5] = -2.0 * kappa * x[5] - g * (x[4] + std::conj(x[4]));
    return dot;
}

SixState blue_rhs(const SixState& state, const ModelParams& p, double delta) {
    require_case(state, Sideband::Blue, "blue_rhs");
    const auto& x = state.components;
    const double g = p.coupling();
    const double gamma = p.gamma;
    const double kappa = p.kappa;
    const double eps = p.epsilon;
    const Complex id = kI * delta;

    SixState dot{Sideband::Blue, {}};
    auto& d = dot.components;
    d[0] = -2.0 * kappa * x[0] - g * (std::conj(x[2]) + x[2]) +
           eps * (std::conj(x[1]) + x[1]) + gamma * x[4];
    d[1] = (id - 2.0 * kappa - 0.5 * gamma) * x[1] - g * x[3] - eps * (x[0] - x[4]);
    d[2] = -(3.0 * kappa + 0.5 * gamma) * x[2] + eps * x[3] + g * (x[0] - x[5]);
    d[3] = (id - 3.0 * kappa - gamma) * x[3] + g * x[1] - eps * x[2];
    d[4] = -(2.0 * kappa + gamma) * x[4] - eps * (x[1] + std::conj(x[1]));
    d[5] = -(4.0 * kappa + gamma) * x[5] + 2.0 * kappa * x[4] +
           g * (std::conj(x[2]) + x[2]);
    return dot;
}

Susceptibility susceptibility_from_coherence(Complex rho_0g0e, double epsilon) {
    if (!(epsilon > 0.0))
        throw ValidationError("epsilon: chi = rho_0g0e / (i epsilon) requires epsilon > 0");
    const Complex chi = rho_0g0e / (kI * epsilon);
    return Susceptibility{chi.real(), chi.imag()};
}

Susceptibility red_susceptibility(const ModelParams& p, double delta) {
    validate(p);
    const double g = p.coupling();
    const Complex id = kI * delta;
    const Complex den = (id - 0.5 * p.gamma) * (id - p.kappa) + g * g;
    if (std::abs(den) <= kDegenerateDenominator)
        throw SolverError("red_susceptibility: degenerate denominator at delta = " +
                          str(delta));
    const Complex chi = (id - p.kappa) / (kI * den);
    return Susceptibility{chi.real(), chi.imag()};
}

Susceptibility blue_susceptibility(const ModelParams& p, double delta) {
    validate(p);
    const double g = p.coupling();
    const Complex id = kI * delta;
    const Complex den =
        (id - 2.0 * p.kappa - 0.5 * p.gamma) * (id - 3.0 * p.kappa - p.gamma) + g * g;
    if (std::abs(den) <= kDegenerateDenominator)
        throw SolverError("blue_susceptibility: degenerate denominator at delta = " +
                          str(delta));
    const Complex chi = (id - 3.0 * p.kappa - p.gamma) / (kI * den);
    return Susceptibility{chi.real(), chi.imag()};
}

Complex weak_probe_solve(Sideband sideband, const ModelParams& p, double delta) {
    validate(p);
    if (!(p.epsilon > 0.0))
        throw ValidationError("epsilon: weak_probe_solve requires epsilon > 0");
    const double g = p.coupling();
    const Complex id = kI * delta;

    // Steady state of the two first-order coherences with rho_0g0g clamped
    // to one; everything else enters at second order and is dropped.
    Eigen::Matrix2cd a;
    if (sideband == Sideband::Red)
        a << id - 0.5 * p.gamma, g,
             -g, id - p.kappa;
    else
        a << id - 2.0 * p.kappa - 0.5 * p.gamma, -g,
             g, id - 3.0 * p.kappa - p.gamma;
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (std::abs(det) <= kDegenerateDenominator)
        throw SolverError("weak_probe_solve: singular coherence system at delta = " +
                          str(delta));
    Eigen::Vector2cd b;
    b << Complex{p.epsilon, 0.0}, Complex{0.0, 0.0};
    const Eigen::Vector2cd x = a.partialPivLu().solve(b);
    return x(0);
}

SixState integrate_truncated(Sideband sideband, const ModelParams& p, double delta,
                             double t_final, double dt) {
    validate(p);
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw ValidationError("t_final: integration time must be >= 0");
    if (dt <= 0.0)
        dt = 1e-2 / std::max({p.gamma, p.kappa, p.coupling(), std::abs(delta), 1.0});

    SixState state{sideband, {}};
    // All population starts in |0g> (Red) or |0e> (Blue).
    state.components[sideband == Sideband::Red ? 0 : 4] = 1.0;

    const auto rhs = [&](const SixState& s) {
        return sideband == Sideband::Red ? red_rhs(s, p, delta) : blue_rhs(s, p, delta);
    };
    const auto shifted = [&](const SixState& s, const SixState& k, double factor) {
        SixState out{sideband, s.components};
        for (int i = 0; i < 6; ++i) out.components[i] += factor * k.components[i];
        return out;
    };

    const long n_steps = long(std::ceil(t_final / dt - 1e-12));
    const double h = n_steps > 0 ? t_final / double(n_steps) : 0.0;
    for (long step = 0; step < n_steps; ++step) {
        const SixState k1 = rhs(state);
        const SixState k2 = rhs(shifted(state, k1, 0.5 * h));
        const SixState k3 = rhs(shifted(state, k2, 0.5 * h));
        const SixState k4 = rhs(shifted(state, k3, h));
        for (int i = 0; i < 6; ++i)
            state.components[i] += (h / 6.0) * (k1.components[i] + 2.0 * k2.components[i] +
                                                2.0 * k3.components[i] + k4.components[i]);
        if (!all_finite(state.components))
            throw SolverError("integrate_truncated: state turned non-finite at t = " +
                              str(double(step + 1) * h));
    }
    return state;
}

} // namespace ionspec
