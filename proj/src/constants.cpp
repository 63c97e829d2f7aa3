#include "epbound/constants.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace epb {

CouplingConfig CouplingConfig::make(AlphaMode mode, double custom_alpha,
                                    double rest_energy_eV) {
    CouplingConfig cfg;
    cfg.alpha_mode = mode;
    cfg.electron_rest_energy_eV = rest_energy_eV;
    switch (mode) {
        case AlphaMode::paper:  cfg.alpha = kAlphaPaper; break;
        case AlphaMode::codata: cfg.alpha = kAlphaCodata; break;
        case AlphaMode::custom: cfg.alpha = custom_alpha; break;
    }
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw std::domain_error("alpha must lie in (0, 1)");
    if (!(cfg.electron_rest_energy_eV > 0.0))
        throw std::domain_error("electron rest energy must be positive");
    return cfg;
}

CouplingConfig CouplingConfig::from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");

    AlphaMode mode = AlphaMode::paper;
    double custom_alpha = 0.0;
    double rest_energy = kElectronRestEnergyDefault_eV;

    for (const auto& [key, value] : j.items()) {
        if (key == "alpha_mode") {
            const std::string s = value.get<std::string>();
            if (s == "paper") mode = AlphaMode::paper;
            else if (s == "codata") mode = AlphaMode::codata;
            else if (s == "custom") mode = AlphaMode::custom;
            else throw std::invalid_argument("unknown alpha_mode: " + s);
        } else if (key == "alpha") {
            custom_alpha = value.get<double>();
        } else if (key == "electron_rest_energy_eV") {
            rest_energy = value.get<double>();
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    if (mode != AlphaMode::custom && j.contains("alpha"))
        throw std::invalid_argument("\"alpha\" is only valid with alpha_mode=custom");
    return make(mode, custom_alpha, rest_energy);
}

std::string unit_name(Unit u) {
    switch (u) {
        case Unit::dimensionless_m: return "m";
        case Unit::eV:              return "eV";
        case Unit::bohr_radius:     return "a_B";
        case Unit::compton_length:  return "lambda_e";
    }
    return "?";
}

std::string alpha_mode_name(AlphaMode m) {
    switch (m) {
        case AlphaMode::paper:  return "paper";
        case AlphaMode::codata: return "codata";
        case AlphaMode::custom: return "custom";
    }
    return "?";
}

PhysicalQuantity binding_energy_eV(double E_dimensionless, const CouplingConfig& cfg) {
    return {cfg.electron_rest_energy_eV * (2.0 - E_dimensionless), Unit::eV};
}

PhysicalQuantity damping_radius(double beta, StateClass state_class,
                                const CouplingConfig& cfg) {
    if (!(beta > 0.0))
        throw std::domain_error("damping radius requires beta > 0");
    if (state_class == StateClass::positronium)
        return {cfg.alpha / beta, Unit::bohr_radius};
    return {1.0 / beta, Unit::compton_length};
}

PhysicalQuantity convert_length(const PhysicalQuantity& q, Unit target,
                                const CouplingConfig& cfg) {
    if (q.unit == target) return q;
    // a_B = lambda_e / alpha
    if (q.unit == Unit::bohr_radius && target == Unit::compton_length)
        return {q.value / cfg.alpha, Unit::compton_length};
    if (q.unit == Unit::compton_length && target == Unit::bohr_radius)
        return {q.value * cfg.alpha, Unit::bohr_radius};
    throw std::invalid_argument("unsupported length conversion");
}

} // namespace epb
