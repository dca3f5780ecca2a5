// Cartesian sweeps and their CSV form.

#include "oqb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "oqb/errors.hpp"
#include "oqb/numeric.hpp"

namespace oqb {

std::string_view to_string(SweepParameter parameter) {
    switch (parameter) {
    case SweepParameter::omega_drive: return "omega_drive";
    case SweepParameter::delta_A: return "delta_A";
    case SweepParameter::delta_B: return "delta_B";
    case SweepParameter::delta_common: return "delta_common";
    case SweepParameter::delta_L: return "delta_L";
    case SweepParameter::R: return "R";
    case SweepParameter::r1: return "r1";
    }
    return "unknown";
}

SweepParameter sweep_parameter_from_string(std::string_view name) {
    for (auto p : {SweepParameter::omega_drive, SweepParameter::delta_A, SweepParameter::delta_B,
                   SweepParameter::delta_common, SweepParameter::delta_L, SweepParameter::R,
                   SweepParameter::r1}) {
        if (to_string(p) == name) return p;
    }
    throw ConfigError("unknown sweep parameter '" + std::string(name) + "'");
}

SystemParams apply(SystemParams p, SweepParameter parameter, double value) {
    switch (parameter) {
    case SweepParameter::omega_drive: p.omega_drive = value; break;
    case SweepParameter::delta_A: p.delta_A = value; break;
    case SweepParameter::delta_B: p.delta_B = value; break;
    case SweepParameter::delta_common: p.delta_A = p.delta_B = value; break;
    case SweepParameter::delta_L: p.delta_L = value; break;
    case SweepParameter::R: p.R = value; break;
    case SweepParameter::r1: p.r1 = value; break;
    }
    return p;
}

MetricsSeries run_point(const SystemParams& params, const TimeGrid& grid, Engine engine,
                        const IntegratorOptions& integrator) {
    const AmplitudeTrajectory traj = compute_trajectory(params, grid, engine, integrator);
    return evaluate_metrics(traj, dressed_frame(params).B.chi);
}

namespace {

// Mixed-radix decoding of a flat index; the last axis varies fastest.
std::vector<double> point_at(const std::vector<SweepAxis>& axes, std::size_t index) {
    std::vector<double> point(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
        const std::size_t n = axes[a].values.size();
        point[a] = axes[a].values[index % n];
        index /= n;
    }
    return point;
}

std::string describe(const std::vector<SweepAxis>& axes, const std::vector<double>& point) {
    std::string s;
    for (std::size_t a = 0; a < axes.size(); ++a) {
        if (a) s += ", ";
        s += std::string(to_string(axes[a].parameter)) + "=" + format_double(point[a]);
    }
    return s;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    std::size_t n_points = 1;
    for (const SweepAxis& axis : spec.axes) {
        if (axis.values.empty()) {
            throw ConfigError("sweep axis '" + std::string(to_string(axis.parameter)) + "' is empty");
        }
        for (double v : axis.values) {
            if (!std::isfinite(v)) throw ConfigError("sweep axis values must be finite");
        }
        n_points *= axis.values.size();
    }
    if (spec.engine == Engine::oracle) throw ConfigError("sweeps support closed_form or pseudomode");

    std::vector<SystemParams> points(n_points);
    SweepResult result;
    for (const SweepAxis& axis : spec.axes) result.axis_names.emplace_back(to_string(axis.parameter));
    result.rows.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        result.rows[i].point = point_at(spec.axes, i);
        SystemParams p = spec.base;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            p = apply(p, spec.axes[a].parameter, result.rows[i].point[a]);
        }
        try {
            points[i] = validate(p);
        } catch (const ConfigError& e) {
            throw ConfigError("sweep point {" + describe(spec.axes, result.rows[i].point) +
                              "}: " + e.what());
        }
        if (spec.engine == Engine::closed_form && !p.equal_detunings()) {
            throw ConfigError("sweep point {" + describe(spec.axes, result.rows[i].point) +
                              "}: closed_form engine requires delta_A == delta_B");
        }
    }
    if (spec.keep_series) result.series.resize(n_points, MetricsSeries{spec.grid, {}, {}, {}, {}, {}, {}});

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failed_index = n_points;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n_points; i = next.fetch_add(1)) {
            try {
                MetricsSeries s = run_point(points[i], spec.grid, spec.engine, spec.integrator);
                SweepRow& row = result.rows[i];
                row.energy = s.max_energy;
                row.power = s.max_power;
                row.ergotropy = s.max_ergotropy;
                if (spec.keep_series) result.series[i] = std::move(s);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                // Report the lowest failing index so the error is schedule-independent.
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_points)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }

    if (failure) {
        const std::string where = describe(spec.axes, result.rows[failed_index].point);
        try {
            std::rethrow_exception(failure);
        } catch (const NumericalError& e) {
            throw SweepPointError(where, e.what(), true);
        } catch (const std::exception& e) {
            throw SweepPointError(where, e.what(), false);
        }
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    for (const std::string& name : result.axis_names) out << "param_" << name << ',';
    out << "E_max,t_E,P_max,t_P,W_max,t_W\n";
    for (const SweepRow& row : result.rows) {
        for (double v : row.point) out << format_double(v) << ',';
        out << format_double(row.energy.value) << ',' << format_double(row.energy.time) << ','
            << format_double(row.power.value) << ',' << format_double(row.power.time) << ','
            << format_double(row.ergotropy.value) << ',' << format_double(row.ergotropy.time)
            << '\n';
    }
}

} // namespace oqb
