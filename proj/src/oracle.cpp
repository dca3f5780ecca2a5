// Discretized-bath propagation.

#include "oqb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "oqb/errors.hpp"
#include "oqb/numeric.hpp"

namespace oqb {

namespace odeint = boost::numeric::odeint;

double DiscretizedBath::total_weight() const {
    std::vector<double> sq(couplings.size());
    std::transform(couplings.begin(), couplings.end(), sq.begin(),
                   [](double g) { return g * g; });
    return pairwise_sum(std::span<const double>(sq));
}

double DiscretizedBath::window_weight() const {
    if (detunings.empty()) return 0.0;
    const double half_width = 0.5 * spacing * static_cast<double>(size());
    return 2.0 / std::numbers::pi * std::atan(half_width / lambda) * W * W;
}

double DiscretizedBath::recurrence_time() const {
    return 2.0 * std::numbers::pi / spacing;
}

DiscretizedBath build_bath(const DressedFrame& frame, double lambda, const BathOptions& options) {
    if (options.n_modes < 100) throw ConfigError("bath needs at least 100 modes");
    if (!(options.span >= 10.0)) throw ConfigError("bath span must be >= 10 lambda");
    if (!(lambda > 0.0)) throw ConfigError("lambda must be > 0");

    DiscretizedBath bath;
    bath.lambda = lambda;
    bath.W = frame.W;
    const double half_width = options.span * lambda;
    bath.spacing = 2.0 * half_width / static_cast<double>(options.n_modes);
    if (bath.spacing > lambda / 20.0) {
        throw ConfigError("bath spacing " + format_double(bath.spacing) +
                          " exceeds lambda/20; increase n_modes or reduce span");
    }

    bath.detunings.resize(options.n_modes);
    bath.couplings.resize(options.n_modes);
    const double prefactor = frame.W * frame.W * lambda / std::numbers::pi;
    for (std::size_t k = 0; k < options.n_modes; ++k) {
        const double d = -half_width + (static_cast<double>(k) + 0.5) * bath.spacing;
        bath.detunings[k] = d;
        bath.couplings[k] = std::sqrt(prefactor / (d * d + lambda * lambda) * bath.spacing);
    }

    const double target = bath.window_weight();
    if (target > 0.0 && std::abs(bath.total_weight() - target) > 0.01 * target) {
        throw ConfigError("discretized bath weight deviates from the Lorentzian by more than 1%");
    }
    return bath;
}

namespace {

using OracleState = std::vector<complex>;  // [C_A, C_B, C_0 ... C_{n-1}]

class OracleSystem {
public:
    OracleSystem(const SystemParams& p, const DressedFrame& f, const DiscretizedBath& bath)
        : bath_(bath),
          a_{p.alpha_A() * f.A.cos2, p.alpha_B() * f.B.cos2},
          omega_{f.A.chi + p.delta_L, f.B.chi + p.delta_L},
          terms_(bath.size()),
          phases_(bath.size()) {}

    void operator()(const OracleState& y, OracleState& dy, double t) {
        const std::size_t n = bath_.size();
        for (std::size_t k = 0; k < n; ++k) {
            phases_[k] = std::polar(1.0, -bath_.detunings[k] * t);
            terms_[k] = bath_.couplings[k] * y[k + 2] * phases_[k];
        }
        const complex field = pairwise_sum(std::span<const complex>(terms_));
        const complex I{0.0, 1.0};
        const complex ph_A = std::polar(1.0, omega_[0] * t);
        const complex ph_B = std::polar(1.0, omega_[1] * t);
        dy[0] = -I * a_[0] * ph_A * field;
        dy[1] = -I * a_[1] * ph_B * field;
        const complex source = a_[0] * std::conj(ph_A) * y[0] + a_[1] * std::conj(ph_B) * y[1];
        for (std::size_t k = 0; k < n; ++k) {
            dy[k + 2] = -I * bath_.couplings[k] * std::conj(phases_[k]) * source;
        }
    }

private:
    const DiscretizedBath& bath_;
    double a_[2];
    double omega_[2];
    std::vector<complex> terms_;
    std::vector<complex> phases_;
};

double state_norm(const OracleState& y) {
    std::vector<double> sq(y.size());
    std::transform(y.begin(), y.end(), sq.begin(), [](const complex& c) { return std::norm(c); });
    return pairwise_sum(std::span<const double>(sq));
}

} // namespace

OracleRun propagate(const SystemParams& p, const DressedFrame& frame,
                    const DiscretizedBath& bath, const TimeGrid& grid,
                    const IntegratorOptions& options) {
    if (grid.t_max() >= 0.5 * bath.recurrence_time()) {
        throw ConfigError("oracle grid reaches t = " + format_double(grid.t_max()) +
                          ", beyond half the bath recurrence time " +
                          format_double(0.5 * bath.recurrence_time()));
    }

    OracleRun run{AmplitudeTrajectory{grid, {}, {}, Engine::oracle}, {}, 0.0};
    run.trajectory.c1.reserve(grid.size());
    run.trajectory.c2.reserve(grid.size());
    run.total_norm.reserve(grid.size());

    OracleState y(bath.size() + 2, complex{0.0, 0.0});
    y[0] = p.c01;
    y[1] = p.c02;
    const double initial_norm = state_norm(y);

    OracleSystem system(p, frame, bath);
    auto stepper = odeint::make_dense_output(options.abs_tol, options.rel_tol,
                                             odeint::runge_kutta_dopri5<OracleState>());
    const auto& times = grid.samples();
    try {
        odeint::integrate_times(
            stepper, std::ref(system), y, times.begin(), times.end(), options.initial_step,
            [&](const OracleState& s, double t) {
                const double norm = state_norm(s);
                const double dev = std::abs(norm - initial_norm);
                if (dev > 1e-6) {
                    throw NumericalError("oracle norm breach " + format_double(dev) +
                                         " at t = " + format_double(t));
                }
                run.max_norm_deviation = std::max(run.max_norm_deviation, dev);
                run.total_norm.push_back(norm);
                run.trajectory.c1.push_back(s[0]);
                run.trajectory.c2.push_back(s[1]);
            },
            odeint::max_step_checker(static_cast<int>(options.max_steps_per_sample)));
    } catch (const odeint::odeint_error& e) {
        throw NumericalError(std::string("oracle integrator failed: ") + e.what());
    }
    return run;
}

double sup_norm_gap(const AmplitudeTrajectory& a, const AmplitudeTrajectory& b) {
    if (a.c1.size() != b.c1.size() || a.c2.size() != b.c2.size()) {
        throw ConfigError("trajectories have different lengths");
    }
    double gap = 0.0;
    for (std::size_t i = 0; i < a.c1.size(); ++i) {
        gap = std::max({gap, std::abs(a.c1[i] - b.c1[i]), std::abs(a.c2[i] - b.c2[i])});
    }
    return gap;
}

} // namespace oqb
