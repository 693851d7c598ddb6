#pragma once

#include <numbers>
#include <string>

#include "tmdnp/errors.hpp"

namespace tmdnp {

// A nuclear species identified by its Larmor frequency at the working field.
class NucleusSpec {
public:
    NucleusSpec(std::string name, double larmor_freq_hz)
        : name_(std::move(name)), larmor_freq_hz_(larmor_freq_hz) {
        if (!(larmor_freq_hz_ > 0.0))
            throw InvalidArgumentError("NucleusSpec: larmor frequency must be > 0");
    }

    const std::string& name() const { return name_; }
    double larmor_freq_hz() const { return larmor_freq_hz_; }
    // omega_n in rad/s; the math below works in angular frequencies.
    double omega() const { return 2.0 * std::numbers::pi * larmor_freq_hz_; }

private:
    std::string name_;
    double larmor_freq_hz_;
};

}  // namespace tmdnp
