#include "ionspec/params.hpp"

#include <cmath>
#include <cstdio>

#include "ionspec/errors.hpp"

namespace ionspec {

const char* to_string(Sideband s) {
    return s == Sideband::Red ? "red" : "blue";
}

Sideband sideband_from_string(const std::string& name) {
    if (name == "red") return Sideband::Red;
    if (name == "blue") return Sideband::Blue;
    throw ValidationError("case: expected 'red' or 'blue', got '" + name + "'");
}

std::vector<std::string> validate(const ModelParams& p) {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(p.gamma) || p.gamma != 1.0)
        throw ValidationError("gamma: must equal 1 exactly (all rates are in units of gamma)");
    if (!finite(p.kappa) || p.kappa < 0.0)
        throw ValidationError("kappa: heating rate must be finite and >= 0");
    if (!finite(p.nbar) || p.nbar < 0.0)
        throw ValidationError("nbar: mean thermal phonon number must be finite and >= 0");
    if (!finite(p.eta) || p.eta <= 0.0)
        throw ValidationError("eta: Lamb-Dicke parameter must be finite and > 0");
    if (!finite(p.omega) || p.omega < 0.0)
        throw ValidationError("omega: control Rabi frequency must be finite and >= 0");
    if (!finite(p.epsilon) || p.epsilon < 0.0)
        throw ValidationError("epsilon: probe Rabi frequency must be finite and >= 0");

    std::vector<std::string> warnings;
    if (p.eta > 0.3) {
        char msg[64];
        std::snprintf(msg, sizeof msg, "eta = %g is outside the Lamb-Dicke regime (eta << 1)",
                      p.eta);
        warnings.push_back(msg);
    }
    if (p.epsilon > 0.0 && p.epsilon >= 0.1 * p.gamma)
        warnings.push_back("epsilon is not small against gamma; weak-probe formulas lose accuracy");
    if (p.epsilon > 0.0 && p.omega > 0.0 && p.epsilon >= 0.1 * p.eta * p.omega)
        warnings.push_back("epsilon is not small against eta*omega; weak-probe formulas lose accuracy");
    return warnings;
}

} // namespace ionspec
