// Closed-form and pseudomode amplitude engines.

#include "oqb/dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "oqb/errors.hpp"

namespace oqb {

namespace odeint = boost::numeric::odeint;

TimeGrid TimeGrid::uniform(double t_max, std::size_t n_points) {
    if (!(std::isfinite(t_max) && t_max > 0.0)) throw ConfigError("t_max must be > 0");
    if (n_points < 2) throw ConfigError("time grid needs at least 2 points");
    std::vector<double> s(n_points);
    const double denom = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        s[i] = t_max * (static_cast<double>(i) / denom);
    }
    s.back() = t_max;
    return TimeGrid(std::move(s));
}

TimeGrid TimeGrid::from_samples(std::vector<double> samples) {
    if (samples.size() < 2) throw ConfigError("time grid needs at least 2 points");
    if (samples.front() != 0.0) throw ConfigError("time grid must start at 0");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i] > samples[i - 1]) || !std::isfinite(samples[i])) {
            throw ConfigError("time grid must be strictly increasing and finite");
        }
    }
    return TimeGrid(std::move(samples));
}

std::string_view to_string(Engine engine) {
    switch (engine) {
    case Engine::closed_form: return "closed_form";
    case Engine::pseudomode: return "pseudomode";
    case Engine::oracle: return "oracle";
    }
    return "unknown";
}

Engine engine_from_string(std::string_view name) {
    if (name == "closed" || name == "closed_form") return Engine::closed_form;
    if (name == "pseudomode") return Engine::pseudomode;
    if (name == "oracle") return Engine::oracle;
    throw ConfigError("unknown engine '" + std::string(name) + "'");
}

KernelParams kernel_params(const SystemParams& p, const DressedFrame& frame) {
    const complex M{p.lambda, -(frame.A.chi + p.delta_L)};
    // alpha_T W (1 + cos eta) = 2 R lambda cos^2(eta/2)
    const double a = 2.0 * p.alpha_T * frame.W * frame.A.cos2;
    return {M, std::sqrt(M * M - a * a)};
}

complex survival_amplitude(const KernelParams& kernel, double t) {
    const complex M = kernel.M;
    complex F = kernel.F;
    if (F.real() < 0.0 || (F.real() == 0.0 && F.imag() < 0.0)) F = -F;
    if (F == M) return 1.0;  // decoupled cavity

    const complex half_mt = 0.5 * M * t;
    const complex x = 0.5 * F * t;

    if (std::abs(F) * t < 1e-6 || std::abs(F) < 1e-10 * std::abs(M)) {
        const complex x2 = x * x;
        const complex ch = 1.0 + x2 / 2.0 + x2 * x2 / 24.0;
        const complex shc = 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
        return std::exp(-half_mt) * (ch + half_mt * shc);
    }
    if (std::abs(x) <= 1.0) {
        return std::exp(-half_mt) * (std::cosh(x) + half_mt * (std::sinh(x) / x));
    }
    const complex ratio = M / F;
    return 0.5 * ((1.0 + ratio) * std::exp(x - half_mt) + (1.0 - ratio) * std::exp(-x - half_mt));
}

AmplitudeTrajectory equal_frequency_trajectory(const SystemParams& p,
                                               const DressedFrame& frame,
                                               const TimeGrid& grid) {
    if (!p.equal_detunings()) {
        throw ConfigError("closed-form engine requires delta_A == delta_B");
    }
    const double r1 = p.r1;
    const double r2 = p.r2();
    const complex beta_plus = r1 * p.c01 + r2 * p.c02;
    const complex beta_minus = r2 * p.c01 - r1 * p.c02;
    const KernelParams kernel = kernel_params(p, frame);

    AmplitudeTrajectory traj{grid, {}, {}, Engine::closed_form};
    traj.c1.reserve(grid.size());
    traj.c2.reserve(grid.size());
    for (double t : grid.samples()) {
        const complex z = survival_amplitude(kernel, t);
        traj.c1.push_back(r2 * beta_minus + r1 * z * beta_plus);
        traj.c2.push_back(-r1 * beta_minus + r2 * z * beta_plus);
    }
    return traj;
}

namespace {

using PseudomodeState = std::array<complex, 3>;  // C_A, C_B, b

struct PseudomodeSystem {
    double g_A;
    double g_B;
    double chi_A;
    double chi_B;
    complex decay;  // lambda - i delta_L

    void operator()(const PseudomodeState& y, PseudomodeState& dy, double t) const {
        const complex ph_A = std::polar(1.0, chi_A * t);
        const complex ph_B = std::polar(1.0, chi_B * t);
        const complex b = y[2];
        dy[0] = -g_A * ph_A * b;
        dy[1] = -g_B * ph_B * b;
        dy[2] = -decay * b + g_A * std::conj(ph_A) * y[0] + g_B * std::conj(ph_B) * y[1];
    }
};

} // namespace

AmplitudeTrajectory general_trajectory(const SystemParams& p,
                                       const DressedFrame& frame,
                                       const TimeGrid& grid,
                                       const IntegratorOptions& options) {
    const PseudomodeSystem system{frame.W * p.alpha_A() * frame.A.cos2,
                                  frame.W * p.alpha_B() * frame.B.cos2,
                                  frame.A.chi,
                                  frame.B.chi,
                                  complex{p.lambda, -p.delta_L}};

    AmplitudeTrajectory traj{grid, {}, {}, Engine::pseudomode};
    traj.c1.reserve(grid.size());
    traj.c2.reserve(grid.size());

    PseudomodeState y{p.c01, p.c02, complex{0.0, 0.0}};
    auto stepper = odeint::make_dense_output(options.abs_tol, options.rel_tol,
                                             odeint::runge_kutta_dopri5<PseudomodeState>());
    const auto& times = grid.samples();
    try {
        odeint::integrate_times(
            stepper, system, y, times.begin(), times.end(), options.initial_step,
            [&traj](const PseudomodeState& s, double) {
                traj.c1.push_back(s[0]);
                traj.c2.push_back(s[1]);
            },
            odeint::max_step_checker(static_cast<int>(options.max_steps_per_sample)));
    } catch (const odeint::odeint_error& e) {
        throw NumericalError(std::string("pseudomode integrator failed: ") + e.what());
    }
    if (traj.c1.size() != grid.size()) {
        throw NumericalError("pseudomode integrator did not reach every grid sample");
    }
    return traj;
}

AmplitudeTrajectory compute_trajectory(const SystemParams& params,
                                       const TimeGrid& grid,
                                       Engine engine,
                                       const IntegratorOptions& options) {
    const SystemParams p = validate(params);
    const DressedFrame frame = dressed_frame(p);
    switch (engine) {
    case Engine::closed_form: return equal_frequency_trajectory(p, frame, grid);
    case Engine::pseudomode: return general_trajectory(p, frame, grid, options);
    case Engine::oracle: break;
    }
    throw ConfigError("the oracle engine is only available through oracle-check");
}

} // namespace oqb
