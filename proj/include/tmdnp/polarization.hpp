#pragma once

#include <cmath>

#include "tmdnp/constants.hpp"
#include "tmdnp/errors.hpp"
#include "tmdnp/nucleus.hpp"

namespace tmdnp {

// Nuclear polarization with the spin temperature it implies. The sigma
// fields carry propagated experimental uncertainties where available and are
// zero for purely analytic results.
struct SpinTempResult {
    double spin_temp_k = 0.0;
    double polarization = 0.0;
    double sigma_spin_temp_k = 0.0;
    double sigma_polarization = 0.0;
};

// T_s = hbar*omega_n / (2 kB atanh(P_n)). Signed: inverted polarization
// yields a negative spin temperature. P_n = 0 is reported as a dedicated
// error instead of +/-inf so callers cannot propagate infinities silently.
inline double spin_temperature_from_polarization(double p_n, const NucleusSpec& nucleus) {
    if (!(std::abs(p_n) < 1.0))
        throw OutOfRangeError("spin temperature: |P_n| must be < 1");
    if (p_n == 0.0)
        throw InfiniteTemperatureError("spin temperature: P_n = 0 implies infinite temperature");
    return zeeman_temperature_scale(nucleus.omega()) / std::atanh(p_n);
}

// P_n = tanh(hbar*omega_n / (2 kB T_s)). For arguments below 0.1 this agrees
// with the linear form hbar*omega_n / (2 kB T_s) to better than 1%.
inline double polarization_from_spin_temperature(double spin_temp_k, const NucleusSpec& nucleus) {
    if (spin_temp_k == 0.0)
        throw InvalidArgumentError("polarization: spin temperature must be nonzero");
    return std::tanh(zeeman_temperature_scale(nucleus.omega()) / spin_temp_k);
}

// Polarization delivered to a nucleus by a triple spin flip with two
// electrons of polarizations P_e1, P_e2:
//   P_n = (P_e1 - P_e2) / (1 - P_e1 P_e2).
// Antisymmetric under swapping the electrons and bounded by 1 in magnitude.
inline double ce_pair_polarization(double p_e1, double p_e2) {
    if (!(std::abs(p_e1) <= 1.0) || !(std::abs(p_e2) <= 1.0))
        throw InvalidArgumentError("ce_pair_polarization: |P_e| must be <= 1");
    const double denom = 1.0 - p_e1 * p_e2;
    if (denom == 0.0)
        throw IndeterminateInputError("ce_pair_polarization: both electrons fully polarized alike");
    return (p_e1 - p_e2) / denom;
}

}  // namespace tmdnp
