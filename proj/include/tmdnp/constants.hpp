#pragma once

#include <numbers>

namespace tmdnp {

// 2019 SI exact values.
namespace constants {
inline constexpr double planck = 6.62607015e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;       // J/K
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);  // J s
}  // namespace constants

struct PhysConstants {
    double h = constants::planck;
    double hbar = constants::hbar;
    double kB = constants::boltzmann;
};

// hbar * omega / (2 kB), the temperature scale of a transition at angular
// frequency omega (rad/s). Appears in every polarization formula.
inline double zeeman_temperature_scale(double omega) {
    return constants::hbar * omega / (2.0 * constants::boltzmann);
}

}  // namespace tmdnp
