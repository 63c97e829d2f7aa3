#pragma once

#include <string>

namespace epb {

/// Which value of the fine-structure constant a run uses. The two named
/// modes pin the two defensible choices; custom is for sensitivity scans.
enum class AlphaMode { paper, codata, custom };

inline constexpr double kAlphaPaper = 1.0 / 137.0;
inline constexpr double kAlphaCodata = 1.0 / 137.035999084;
inline constexpr double kElectronRestEnergyDefault_eV = 510998.95;

/// Physical constants for a run. Everything downstream works in
/// dimensionless variables (energies in units of m, lengths in electron
/// Compton lengths); this object only matters at reporting boundaries.
/// Immutable after construction; safe to share across threads.
struct CouplingConfig {
    double alpha = kAlphaPaper;
    double electron_rest_energy_eV = kElectronRestEnergyDefault_eV;
    AlphaMode alpha_mode = AlphaMode::paper;

    static CouplingConfig make(AlphaMode mode,
                               double custom_alpha = 0.0,
                               double rest_energy_eV = kElectronRestEnergyDefault_eV);

    /// Parse the JSON config document. Unknown keys rejected; absent keys
    /// take defaults.
    static CouplingConfig from_json_text(const std::string& text);
};

enum class Unit { dimensionless_m, eV, bohr_radius, compton_length };

std::string unit_name(Unit u);
std::string alpha_mode_name(AlphaMode m);

struct PhysicalQuantity {
    double value = 0.0;
    Unit unit = Unit::dimensionless_m;
};

/// Binding energy mc^2 * (2 - E) in eV for a dimensionless total energy E.
PhysicalQuantity binding_energy_eV(double E_dimensionless, const CouplingConfig& cfg);

enum class StateClass { positronium, deep };

/// Exponential damping radius of the trial wave function. The positronium
/// class reports in Bohr radii (a_B * alpha / beta), the deep class in
/// Compton lengths (lambda_e / beta). Both are the same physical length,
/// since a_B = lambda_e / alpha.
PhysicalQuantity damping_radius(double beta, StateClass state_class,
                                const CouplingConfig& cfg);

/// Convert a length between bohr_radius and compton_length units.
PhysicalQuantity convert_length(const PhysicalQuantity& q, Unit target,
                                const CouplingConfig& cfg);

} // namespace epb
