// Single-excitation amplitude dynamics of charger (C1) and battery (C2).
//
// Two engines:
//   * closed form for equal detunings, built on the survival amplitude Z(t);
//   * pseudomode ODE for arbitrary detunings. The Lorentzian memory kernel is a
//     pure exponential, so the integro-differential equations are equivalent to
//     a local three-amplitude system with one auxiliary damped mode b(t):
//
//       dC_j/dt = -g_j e^{+i chi_j t} b,                    g_j = W alpha_j cos^2(eta_j/2)
//       db/dt   = -(lambda - i delta_L) b + sum_j g_j e^{-i chi_j t} C_j,   b(0) = 0

#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "oqb/model.hpp"
#include "oqb/numeric.hpp"

namespace oqb {

class TimeGrid {
public:
    // n_points uniform samples on [0, t_max].
    static TimeGrid uniform(double t_max, std::size_t n_points);
    // Arbitrary strictly increasing samples starting at 0.
    static TimeGrid from_samples(std::vector<double> samples);

    const std::vector<double>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double operator[](std::size_t i) const { return samples_[i]; }
    double t_max() const { return samples_.back(); }

private:
    explicit TimeGrid(std::vector<double> s) : samples_(std::move(s)) {}
    std::vector<double> samples_;
};

enum class Engine { closed_form, pseudomode, oracle };

std::string_view to_string(Engine engine);
// Accepts "closed", "closed_form", "pseudomode", "oracle".
Engine engine_from_string(std::string_view name);

struct AmplitudeTrajectory {
    TimeGrid grid;
    std::vector<complex> c1;
    std::vector<complex> c2;
    Engine engine{Engine::closed_form};
};

// Laplace-domain data of the survival amplitude for equal detunings.
struct KernelParams {
    complex M;  // lambda - i (chi + delta_L)
    complex F;  // sqrt(M^2 - alpha_T^2 W^2 (1 + cos eta)^2)
};

KernelParams kernel_params(const SystemParams& params, const DressedFrame& frame);

// Z(t) = e^{-Mt/2} (cosh(Ft/2) + (M/F) sinh(Ft/2)), with a series expansion
// near critical damping (F -> 0). Invariant under F -> -F.
complex survival_amplitude(const KernelParams& kernel, double t);

struct IntegratorOptions {
    double rel_tol{1e-9};
    double abs_tol{1e-12};
    double initial_step{1e-3};
    std::size_t max_steps_per_sample{100000};

    bool operator==(const IntegratorOptions&) const = default;
};

// Requires delta_A == delta_B (throws ConfigError otherwise).
AmplitudeTrajectory equal_frequency_trajectory(const SystemParams& params,
                                               const DressedFrame& frame,
                                               const TimeGrid& grid);

// Pseudomode integration; throws NumericalError when the integrator stalls.
AmplitudeTrajectory general_trajectory(const SystemParams& params,
                                       const DressedFrame& frame,
                                       const TimeGrid& grid,
                                       const IntegratorOptions& options = {});

// Validates params and dispatches to the chosen engine (closed_form or pseudomode).
AmplitudeTrajectory compute_trajectory(const SystemParams& params,
                                       const TimeGrid& grid,
                                       Engine engine,
                                       const IntegratorOptions& options = {});

} // namespace oqb
