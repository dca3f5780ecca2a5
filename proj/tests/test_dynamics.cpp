// Survival amplitude, closed-form and pseudomode engines.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "oqb/dynamics.hpp"
#include "oqb/errors.hpp"
#include "support/random_states.hpp"
#include "support/volterra_reference.hpp"

using namespace oqb;

namespace {

SystemParams resonance(double R, double omega) {
    SystemParams p;
    p.R = R;
    p.omega_drive = omega;
    return p;
}

KernelParams kernel_of(const SystemParams& p) { return kernel_params(p, dressed_frame(p)); }

double sup_gap(const AmplitudeTrajectory& a, const AmplitudeTrajectory& b) {
    double gap = 0.0;
    for (std::size_t i = 0; i < a.c1.size(); ++i) {
        gap = std::max({gap, std::abs(a.c1[i] - b.c1[i]), std::abs(a.c2[i] - b.c2[i])});
    }
    return gap;
}

} // namespace

TEST_CASE("time grid construction") {
    const TimeGrid g = TimeGrid::uniform(10.0, 2000);
    CHECK(g.size() == 2000);
    CHECK(g[0] == 0.0);
    CHECK(g.t_max() == 10.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

    CHECK_THROWS_AS(TimeGrid::uniform(0.0, 10), ConfigError);
    CHECK_THROWS_AS(TimeGrid::uniform(1.0, 1), ConfigError);
    CHECK_THROWS_AS(TimeGrid::from_samples({0.0, 1.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(TimeGrid::from_samples({0.5, 1.0}), ConfigError);
    CHECK(TimeGrid::from_samples({0.0, 0.1, 1.0}).size() == 3);
}

TEST_CASE("engine names") {
    CHECK(engine_from_string("closed") == Engine::closed_form);
    CHECK(engine_from_string("closed_form") == Engine::closed_form);
    CHECK(engine_from_string("pseudomode") == Engine::pseudomode);
    CHECK_THROWS_AS(engine_from_string("rk4"), ConfigError);
}

TEST_CASE("survival amplitude: initial value and zero initial slope") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const SystemParams p = test::random_equal_detuning(rng);
        const KernelParams k = kernel_of(p);
        CHECK(survival_amplitude(k, 0.0) == complex{1.0, 0.0});
        const double h = 1e-6;
        const complex slope = (survival_amplitude(k, h) - survival_amplitude(k, 0.0)) / h;
        CHECK(std::abs(slope) < 1e-4);
    }
}

TEST_CASE("survival amplitude: branch independence and bound") {
    std::mt19937_64 rng(5);
    const TimeGrid g = TimeGrid::uniform(10.0, 400);
    for (int trial = 0; trial < 40; ++trial) {
        const SystemParams p = test::random_equal_detuning(rng);
        const KernelParams k = kernel_of(p);
        const KernelParams flipped{k.M, -k.F};
        for (double t : g.samples()) {
            const complex z = survival_amplitude(k, t);
            CHECK(std::abs(z - survival_amplitude(flipped, t)) <= 1e-12);
            CHECK(std::abs(z) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("survival amplitude matches the discretized-bath value at t = 2") {
    // Frozen from a single-excitation propagation over 4000 Lorentzian modes
    // (span 50 lambda) with c01 = c02 = 1/sqrt(2), Z = C2 / r2.
    const complex oracle{0.9422808183899238, -0.028785540342939564};
    const complex z = survival_amplitude(kernel_of(resonance(0.5, 0.5)), 2.0);
    CHECK(std::abs(z - oracle) <= 5e-3);
    CHECK(std::abs(z - oracle) <= 1e-6);
}

TEST_CASE("survival amplitude: critical damping series") {
    // Omega = Delta = 0 gives eta = 0 and alpha_T W (1 + cos eta) = 2 R = lambda = |M|, so F = 0.
    const SystemParams p = resonance(0.5, 0.0);
    const KernelParams k = kernel_of(p);
    CHECK(std::abs(k.F) == 0.0);
    for (double t : {0.0, 0.5, 1.0, 3.0, 10.0}) {
        const complex expected = std::exp(-t / 2) * (1.0 + t / 2);
        CHECK(std::abs(survival_amplitude(k, t) - expected) < 1e-14);
    }
    // Weak coupling decay: the super-radiant amplitude vanishes at lambda t = 50.
    CHECK(std::abs(survival_amplitude(k, 50.0)) < 1e-4);

    // Continuity across the series threshold.
    for (double eps : {1e-12, 1e-9, 1e-7, 1e-5, 1e-3}) {
        const KernelParams near{k.M, std::sqrt(complex{eps * eps, 0.0})};
        for (double t : {0.5, 2.0, 8.0}) {
            const complex expected = std::exp(-t / 2) * (1.0 + t / 2);
            CHECK(std::abs(survival_amplitude(near, t) - expected) < 10 * eps * eps * t * t + 1e-13);
        }
    }
}

TEST_CASE("strong coupling oscillates, weak coupling decays monotonically") {
    const TimeGrid g = TimeGrid::uniform(5.0, 2000);
    {
        const KernelParams k = kernel_of(resonance(10.0, 0.5));
        std::vector<double> mag;
        for (double t : g.samples()) mag.push_back(std::abs(survival_amplitude(k, t)));
        std::size_t min_idx = 0;
        for (std::size_t i = 1; i + 1 < mag.size(); ++i) {
            if (mag[i] < mag[i - 1] && mag[i] <= mag[i + 1]) {
                min_idx = i;
                break;
            }
        }
        REQUIRE(min_idx > 0);
        const double rise = *std::max_element(mag.begin() + min_idx, mag.end()) - mag[min_idx];
        CHECK(rise >= 1e-3);
    }
    {
        const KernelParams k = kernel_of(resonance(0.5, 0.5));
        double prev = 1.0;
        for (double t : g.samples()) {
            const double m = std::abs(survival_amplitude(k, t));
            CHECK(m <= prev + 1e-9);
            prev = m;
        }
    }
}

TEST_CASE("closed form: empty battery start") {
    const SystemParams p = resonance(0.5, 1.0);
    const TimeGrid g = TimeGrid::uniform(10.0, 500);
    const auto traj = equal_frequency_trajectory(p, dressed_frame(p), g);
    CHECK(traj.c2[0] == complex{0.0, 0.0});
    CHECK(traj.c1[0] == complex{1.0, 0.0});
    const KernelParams k = kernel_of(p);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(std::abs(traj.c2[i] - (survival_amplitude(k, g[i]) - 1.0) / 2.0) < 1e-15);
    }
}

TEST_CASE("closed form: sub-radiant state is stationary") {
    SystemParams p = resonance(10.0, 1.3);
    p.r1 = 0.6;
    p.c01 = p.r2();
    p.c02 = -p.r1;
    const auto traj = equal_frequency_trajectory(p, dressed_frame(p), TimeGrid::uniform(5.0, 300));
    for (std::size_t i = 0; i < traj.c1.size(); ++i) {
        CHECK(std::abs(traj.c1[i] - p.c01) < 1e-12);
        CHECK(std::abs(traj.c2[i] - p.c02) < 1e-12);
    }
}

TEST_CASE("closed form: super-radiant state follows Z and decays in weak coupling") {
    SystemParams p = resonance(0.5, 0.0);
    p.c01 = p.r1;
    p.c02 = p.r2();
    const auto traj = equal_frequency_trajectory(p, dressed_frame(p), TimeGrid::uniform(50.0, 1001));
    const KernelParams k = kernel_of(p);
    for (std::size_t i = 0; i < traj.c2.size(); ++i) {
        CHECK(std::abs(traj.c2[i] - p.r2() * survival_amplitude(k, traj.grid[i])) < 1e-14);
    }
    CHECK(std::abs(traj.c2.back()) < 1e-4);
}

TEST_CASE("closed form rejects unequal detunings") {
    SystemParams p;
    p.delta_B = 1.0;
    CHECK_THROWS_AS(equal_frequency_trajectory(p, dressed_frame(p), TimeGrid::uniform(1.0, 10)),
                    ConfigError);
}

TEST_CASE("pseudomode matches the closed form on equal detunings") {
    std::mt19937_64 rng(17);
    const TimeGrid g = TimeGrid::uniform(10.0, 1000);
    for (int trial = 0; trial < 8; ++trial) {
        SystemParams p = test::random_equal_detuning(rng);
        p.r1 = 0.3 + 0.1 * trial;
        const auto a = compute_trajectory(p, g, Engine::closed_form);
        const auto b = compute_trajectory(p, g, Engine::pseudomode);
        CHECK(b.engine == Engine::pseudomode);
        CHECK(sup_gap(a, b) <= 1e-6);
    }
}

TEST_CASE("pseudomode with a decoupled cavity keeps the amplitudes") {
    SystemParams p;
    p.R = 0.0;
    p.delta_B = 2.0;
    p.c01 = complex{0.6, 0.0};
    p.c02 = complex{0.0, 0.8};
    const auto traj = compute_trajectory(p, TimeGrid::uniform(10.0, 100), Engine::pseudomode);
    for (std::size_t i = 0; i < traj.c1.size(); ++i) {
        CHECK(traj.c1[i] == p.c01);
        CHECK(traj.c2[i] == p.c02);
    }
}

TEST_CASE("pseudomode norm never exceeds one") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 10; ++trial) {
        SystemParams p = test::random_equal_detuning(rng);
        p.delta_B = u(rng);
        p.c01 = complex{0.6, 0.0};
        p.c02 = complex{0.0, -0.8};
        const auto traj = compute_trajectory(p, TimeGrid::uniform(10.0, 500), Engine::pseudomode);
        for (std::size_t i = 0; i < traj.c1.size(); ++i) {
            CHECK(std::norm(traj.c1[i]) + std::norm(traj.c2[i]) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("pseudomode agrees with direct quadrature of the memory equations") {
    const TimeGrid g = TimeGrid::uniform(5.0, 500);
    for (const auto& [dA, dB, dL, R] : {std::tuple{0.0, 1.0, 0.5, 0.5}, std::tuple{2.0, 2.0, 0.0, 0.5},
                                        std::tuple{0.0, 4.0, 0.0, 2.0}}) {
        SystemParams p;
        p.delta_A = dA;
        p.delta_B = dB;
        p.delta_L = dL;
        p.R = R;
        p.r1 = 0.8;
        const auto reference = test::volterra_trapezoid(p, g);
        const auto pseudo = compute_trajectory(p, g, Engine::pseudomode);
        CHECK(sup_gap(reference, pseudo) <= 1e-4);
    }
}

TEST_CASE("pseudomode reports an exhausted step budget") {
    SystemParams p = resonance(10.0, 1.0);
    IntegratorOptions opts;
    opts.rel_tol = 1e-14;
    opts.abs_tol = 1e-16;
    opts.max_steps_per_sample = 1;
    CHECK_THROWS_AS(compute_trajectory(p, TimeGrid::uniform(5.0, 3), Engine::pseudomode, opts),
                    NumericalError);
}
