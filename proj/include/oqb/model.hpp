// Physical parameters of the driven two-qubit battery and the
// dressed-frame quantities derived from them.
//
// Units: the cavity loss rate lambda sets the frequency scale; times are in 1/lambda.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oqb/numeric.hpp"

namespace oqb {

struct SystemParams {
    double delta_A{0.0};      // charger detuning from the drive, omega_A - omega_L
    double delta_B{0.0};      // battery detuning from the drive, omega_B - omega_L
    double delta_L{0.0};      // drive detuning from the cavity centre, omega_L - omega_c
    double omega_drive{1.0};  // classical drive strength (>= 0)
    double lambda{1.0};       // cavity loss rate (> 0)
    double alpha_T{1.0};      // collective coupling constant (> 0)
    double r1{std::numbers::sqrt2 / 2.0};  // relative coupling of the charger, in [0, 1]
    double R{0.5};            // coupling-regime ratio alpha_T * W / lambda
    complex c01{1.0, 0.0};    // initial amplitude of |E>_A |G>_B
    complex c02{0.0, 0.0};    // initial amplitude of |G>_A |E>_B

    double r2() const { return std::sqrt(std::max(0.0, 1.0 - r1 * r1)); }
    double alpha_A() const { return r1 * alpha_T; }
    double alpha_B() const { return r2() * alpha_T; }
    bool equal_detunings() const { return delta_A == delta_B; }

    bool operator==(const SystemParams&) const = default;
};

// Returns the parameters unchanged or throws ConfigError naming the first
// violated invariant.
SystemParams validate(const SystemParams& params);

// Dressed quantities of one driven qubit.
struct DressedQubit {
    double eta{0.0};   // mixing angle in [0, pi); exactly pi only for Omega = 0, delta < 0
    double chi{0.0};   // dressed splitting sqrt(delta^2 + 4 Omega^2)
    double cos2{1.0};  // cos^2(eta / 2) = (1 + cos eta) / 2
};

struct DressedFrame {
    DressedQubit A;
    DressedQubit B;
    double W{0.0};     // cavity coupling scale R * lambda / alpha_T
};

// Ω = Δ = 0 resolves to the bare basis (eta = 0, chi = 0).
DressedQubit dress_qubit(double delta, double omega_drive);

DressedFrame dressed_frame(const SystemParams& params);

} // namespace oqb
