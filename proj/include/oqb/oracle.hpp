// Brute-force reference: the single-excitation Schrödinger equation
// over an explicitly discretized Lorentzian cavity continuum.
//
// Mode k has detuning d_k = omega_k - omega_c on a uniform midpoint grid over
// [-span*lambda, +span*lambda] and coupling g_k = sqrt(J(d_k) * spacing) with
// J(d) = W^2 lambda / (pi (d^2 + lambda^2)). In the interaction picture
//
//   dC_j/dt = -i a_j e^{+i(chi_j + delta_L) t} sum_k g_k C_k e^{-i d_k t}
//   dC_k/dt = -i g_k e^{+i d_k t} sum_j a_j e^{-i(chi_j + delta_L) t} C_j
//
// with a_j = alpha_j cos^2(eta_j/2). The discrete bath revives after 2 pi / spacing,
// so propagation is limited to half that horizon.

#pragma once

#include <cstddef>
#include <vector>

#include "oqb/dynamics.hpp"
#include "oqb/model.hpp"

namespace oqb {

struct BathOptions {
    std::size_t n_modes{4000};
    double span{50.0};  // half-width in units of lambda
};

struct DiscretizedBath {
    std::vector<double> detunings;  // d_k, ascending
    std::vector<double> couplings;  // g_k >= 0
    double spacing{0.0};
    double lambda{1.0};
    double W{0.0};

    std::size_t size() const { return detunings.size(); }
    // sum_k g_k^2, pairwise-summed.
    double total_weight() const;
    // Integral of J over the truncated window: (2/pi) atan(span) W^2.
    double window_weight() const;
    double recurrence_time() const;
};

// Throws ConfigError for n_modes < 100, span < 10, spacing > lambda/20, or a
// Riemann sum more than 1% away from the window integral.
DiscretizedBath build_bath(const DressedFrame& frame, double lambda,
                           const BathOptions& options = {});

struct OracleRun {
    AmplitudeTrajectory trajectory;
    std::vector<double> total_norm;  // |C_A|^2 + |C_B|^2 + sum_k |C_k|^2 per sample
    double max_norm_deviation{0.0};
};

// Throws ConfigError when the grid reaches past half the recurrence time and
// NumericalError on integrator failure or a norm breach above 1e-6.
OracleRun propagate(const SystemParams& params, const DressedFrame& frame,
                    const DiscretizedBath& bath, const TimeGrid& grid,
                    const IntegratorOptions& options = {});

// Sup-norm of the difference between two trajectories on the same grid, over
// both amplitudes.
double sup_norm_gap(const AmplitudeTrajectory& a, const AmplitudeTrajectory& b);

} // namespace oqb
