// Run configuration in a flat, human-editable `key = value` format.
//
//   # comment
//   omega_drive = 1
//   c01 = 1, 0            # real, imaginary
//   axis.omega_drive = 0.5, 1, 2
//
// Sweep axes keep their order of appearance. Values are written with 17
// significant digits so parse(serialize(c)) == c.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/dynamics.hpp"
#include "oqb/model.hpp"
#include "oqb/oracle.hpp"
#include "oqb/sweep.hpp"

namespace oqb {

struct RunConfig {
    SystemParams params;
    double t_max{10.0};
    std::size_t n_points{2000};
    Engine engine{Engine::closed_form};
    IntegratorOptions integrator;
    unsigned threads{1};
    std::string out_dir;  // empty: derived from $OQB_OUTPUT_ROOT or ./oqb-out
    std::vector<SweepAxis> axes;
    std::string figure;
    BathOptions oracle;
    double oracle_tolerance{5e-3};

    TimeGrid grid() const { return TimeGrid::uniform(t_max, n_points); }

    bool operator==(const RunConfig& other) const;
};

// Applies one key/value pair; throws ConfigError for unknown keys or bad values.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& config);

} // namespace oqb
