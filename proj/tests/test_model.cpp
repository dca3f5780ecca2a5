// Parameter validation, dressed frame and unit scaling.

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "oqb/dynamics.hpp"
#include "oqb/errors.hpp"
#include "oqb/model.hpp"

using namespace oqb;

namespace {

std::string validation_message(const SystemParams& p) {
    try {
        validate(p);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("validate returns valid params unchanged") {
    const SystemParams p;
    CHECK(validate(p) == p);
}

TEST_CASE("validate names the violated invariant") {
    SystemParams p;
    p.r1 = 1.2;
    CHECK(validation_message(p) == "r1 out of [0,1]");

    p = {};
    p.c01 = 1.0;
    p.c02 = 1.0;
    CHECK(validation_message(p) == "initial state not normalized");

    p = {};
    p.lambda = 0.0;
    CHECK(validation_message(p) == "lambda must be > 0");

    p = {};
    p.alpha_T = -1.0;
    CHECK(validation_message(p) == "alpha_T must be > 0");

    p = {};
    p.omega_drive = -0.1;
    CHECK(validation_message(p) == "omega_drive must be >= 0");

    p = {};
    p.R = -1.0;
    CHECK(validation_message(p) == "R must be >= 0");

    p = {};
    p.delta_L = std::nan("");
    CHECK(validation_message(p) == "detunings must be finite");
}

TEST_CASE("dressed frame: no drive gives the bare basis") {
    const DressedQubit q = dress_qubit(5.0, 0.0);
    CHECK(q.eta == 0.0);
    CHECK(q.chi == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(q.cos2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dressed frame: resonant drive") {
    const DressedQubit q = dress_qubit(0.0, 2.0);
    CHECK(q.eta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(q.chi == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(q.cos2 == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("dressed frame: 3-4-5 triangle") {
    const DressedQubit q = dress_qubit(3.0, 2.0);
    CHECK(q.chi == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(q.cos2 == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("dressed frame: degenerate point and negative detuning") {
    const DressedQubit zero = dress_qubit(0.0, 0.0);
    CHECK(zero.eta == 0.0);
    CHECK(zero.chi == 0.0);
    CHECK(zero.cos2 == 1.0);

    const DressedQubit neg = dress_qubit(-3.0, 2.0);
    CHECK(neg.eta > std::numbers::pi / 2);
    CHECK(neg.eta < std::numbers::pi);
    CHECK(neg.cos2 == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("dressed frame: W scales with R and alpha_T") {
    SystemParams p;
    p.R = 10.0;
    p.lambda = 2.0;
    p.alpha_T = 4.0;
    CHECK(dressed_frame(p).W == doctest::Approx(5.0));
}

TEST_CASE("property: Pythagorean reconstruction and bounds of the dressed frame") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> delta(-20.0, 20.0);
    std::uniform_real_distribution<double> omega(0.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double d = delta(rng);
        const double w = omega(rng);
        const DressedQubit q = dress_qubit(d, w);
        const double scale = std::max(1.0, d * d + 4 * w * w);
        CHECK(std::abs(q.chi * q.chi - (d * d + 4 * w * w)) <= 1e-12 * scale);
        CHECK(q.chi >= std::abs(d));
        CHECK(q.chi >= 2 * w);
        CHECK(q.cos2 == (1.0 + std::cos(q.eta)) / 2.0);
        CHECK(q.eta >= 0.0);
        CHECK(q.eta <= std::numbers::pi);
    }
}

TEST_CASE("property: mixing angle is continuous in drive and detuning") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> delta(-5.0, 5.0);
    std::uniform_real_distribution<double> omega(0.1, 5.0);
    const double step = 1e-7;
    for (int trial = 0; trial < 500; ++trial) {
        const double d = delta(rng);
        const double w = omega(rng);
        const double eta = dress_qubit(d, w).eta;
        CHECK(std::abs(dress_qubit(d, w + step).eta - eta) < 1e-5);
        CHECK(std::abs(dress_qubit(d + step, w).eta - eta) < 1e-5);
    }
}

TEST_CASE("scaling all frequencies by s and time by 1/s leaves populations invariant") {
    SystemParams p;
    p.delta_A = p.delta_B = 1.5;
    p.delta_L = 0.7;
    p.omega_drive = 0.8;
    p.R = 3.0;
    const double s = 2.0;
    SystemParams q = p;
    q.delta_A *= s;
    q.delta_B *= s;
    q.delta_L *= s;
    q.omega_drive *= s;
    q.lambda *= s;

    const TimeGrid g1 = TimeGrid::uniform(6.0, 301);
    const TimeGrid g2 = TimeGrid::uniform(6.0 / s, 301);
    for (Engine e : {Engine::closed_form, Engine::pseudomode}) {
        const auto a = compute_trajectory(p, g1, e);
        const auto b = compute_trajectory(q, g2, e);
        for (std::size_t i = 0; i < g1.size(); ++i) {
            CHECK(std::norm(a.c2[i]) == doctest::Approx(std::norm(b.c2[i])).epsilon(1e-8));
        }
    }
    const KernelParams kp = kernel_params(p, dressed_frame(p));
    const KernelParams kq = kernel_params(q, dressed_frame(q));
    for (double t : {0.3, 1.0, 2.5, 5.0}) {
        CHECK(std::norm(survival_amplitude(kp, t)) ==
              doctest::Approx(std::norm(survival_amplitude(kq, t / s))).epsilon(1e-12));
    }
}
