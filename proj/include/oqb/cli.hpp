// Subcommands of the `oqb` command-line tool.
//
// Every command writes its CSV output plus a run.json metadata file holding the
// fully resolved configuration, so a run can be repeated exactly.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 oracle tolerance failure.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oqb/config.hpp"
#include "oqb/metrics.hpp"

namespace oqb {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr const char* kOutputRootEnv = "OQB_OUTPUT_ROOT";

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_numerical = 3,
    exit_oracle = 4,
};

// Columns: t, re_C1, im_C1, re_C2, im_C2, E_B, P_B, W_B.
void write_timeseries_csv(std::ostream& out, const AmplitudeTrajectory& traj,
                          const MetricsSeries& metrics);
// Single row: E_max, t_E, P_max, t_P, W_max, t_W.
void write_maxima_csv(std::ostream& out, const MetricsSeries& metrics);

void cmd_timeseries(const RunConfig& config, const std::filesystem::path& out_dir);
void cmd_maxima(const RunConfig& config, const std::filesystem::path& out_dir);
void cmd_sweep(const RunConfig& config, const std::filesystem::path& out_dir);
void cmd_reproduce(const RunConfig& config, const std::filesystem::path& out_dir);

struct OracleCheckEntry {
    Engine engine;
    double sup_gap;
    bool pass;
};

struct OracleCheckReport {
    std::vector<OracleCheckEntry> entries;
    double max_norm_deviation{0.0};
    double tolerance{0.0};
    bool pass() const;
};

OracleCheckReport cmd_oracle_check(const RunConfig& config, const std::filesystem::path& out_dir);

// Full command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oqb
