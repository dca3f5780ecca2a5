// Cartesian parameter sweeps over SystemParams.
//
// Points are evaluated independently (optionally on several threads) and stored
// by index, so row order and values do not depend on scheduling. Rows follow
// lexicographic order in axis order: the first axis varies slowest.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/dynamics.hpp"
#include "oqb/metrics.hpp"
#include "oqb/model.hpp"

namespace oqb {

enum class SweepParameter { omega_drive, delta_A, delta_B, delta_common, delta_L, R, r1 };

std::string_view to_string(SweepParameter parameter);
SweepParameter sweep_parameter_from_string(std::string_view name);

// delta_common sets delta_A and delta_B together; r1 also fixes r2 = sqrt(1 - r1^2).
SystemParams apply(SystemParams params, SweepParameter parameter, double value);

struct SweepAxis {
    SweepParameter parameter;
    std::vector<double> values;

    bool operator==(const SweepAxis&) const = default;
};

struct SweepSpec {
    SystemParams base;
    std::vector<SweepAxis> axes;
    TimeGrid grid = TimeGrid::uniform(10.0, 2000);
    Engine engine{Engine::closed_form};
    IntegratorOptions integrator;
    bool keep_series{false};
};

struct SweepRow {
    std::vector<double> point;  // one value per axis
    Extremum energy;
    Extremum power;
    Extremum ergotropy;
};

struct SweepResult {
    std::vector<std::string> axis_names;
    std::vector<SweepRow> rows;
    std::vector<MetricsSeries> series;  // filled only with keep_series
};

// Thrown when one sweep point fails; the message names the point.
class SweepPointError : public std::runtime_error {
public:
    SweepPointError(const std::string& point, const std::string& cause, bool numerical)
        : std::runtime_error("sweep point {" + point + "}: " + cause), numerical_(numerical) {}
    bool numerical() const { return numerical_; }

private:
    bool numerical_;
};

// Metrics of one parameter point with the chosen engine.
MetricsSeries run_point(const SystemParams& params, const TimeGrid& grid, Engine engine,
                        const IntegratorOptions& integrator = {});

// Throws ConfigError for an invalid spec (non-finite axis values, closed-form
// engine with unequal detunings on some point).
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 1);

// Header: param_<axis>..., E_max, t_E, P_max, t_P, W_max, t_W; 17 significant digits.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

} // namespace oqb
