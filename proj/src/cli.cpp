// Command implementations and argument parsing.

#include "oqb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oqb/errors.hpp"
#include "oqb/figures.hpp"
#include "oqb/numeric.hpp"
#include "oqb/oracle.hpp"
#include "oqb/sweep.hpp"

namespace oqb {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json params_json(const SystemParams& p) {
    return {{"delta_A", p.delta_A},   {"delta_B", p.delta_B},   {"delta_L", p.delta_L},
            {"omega_drive", p.omega_drive}, {"lambda", p.lambda}, {"alpha_T", p.alpha_T},
            {"r1", p.r1},             {"r2", p.r2()},           {"R", p.R},
            {"c01", {p.c01.real(), p.c01.imag()}}, {"c02", {p.c02.real(), p.c02.imag()}}};
}

json base_metadata(std::string_view command, const RunConfig& c) {
    json meta;
    meta["artifact"] = "oqb";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["engine"] = to_string(c.engine);
    meta["params"] = params_json(c.params);
    meta["grid"] = {{"t_max", c.t_max}, {"n_points", c.n_points}};
    meta["integrator"] = {{"method", "dormand_prince_5_4_dense"},
                          {"rel_tol", c.integrator.rel_tol},
                          {"abs_tol", c.integrator.abs_tol},
                          {"max_steps_per_sample", c.integrator.max_steps_per_sample}};
    meta["threads"] = c.threads;
    meta["config"] = serialize_config(c);
    return meta;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw ConfigError("cannot create output directory '" + dir.string() + "'");
    }
}

void write_metadata(const fs::path& dir, const json& meta) {
    auto out = open_output(dir / "run.json");
    out << meta.dump(2) << '\n';
}

void write_text(const fs::path& path, const std::string& text) {
    auto out = open_output(path);
    out << text;
}

} // namespace

void write_timeseries_csv(std::ostream& out, const AmplitudeTrajectory& traj,
                          const MetricsSeries& m) {
    out << "t,re_C1,im_C1,re_C2,im_C2,E_B,P_B,W_B\n";
    for (std::size_t i = 0; i < traj.grid.size(); ++i) {
        out << format_double(traj.grid[i]) << ',' << format_double(traj.c1[i].real()) << ','
            << format_double(traj.c1[i].imag()) << ',' << format_double(traj.c2[i].real()) << ','
            << format_double(traj.c2[i].imag()) << ',' << format_double(m.energy[i]) << ','
            << format_double(m.power[i]) << ',' << format_double(m.ergotropy[i]) << '\n';
    }
}

void write_maxima_csv(std::ostream& out, const MetricsSeries& m) {
    out << "E_max,t_E,P_max,t_P,W_max,t_W\n";
    out << format_double(m.max_energy.value) << ',' << format_double(m.max_energy.time) << ','
        << format_double(m.max_power.value) << ',' << format_double(m.max_power.time) << ','
        << format_double(m.max_ergotropy.value) << ',' << format_double(m.max_ergotropy.time)
        << '\n';
}

void cmd_timeseries(const RunConfig& c, const fs::path& dir) {
    const AmplitudeTrajectory traj = compute_trajectory(c.params, c.grid(), c.engine, c.integrator);
    const MetricsSeries m = evaluate_metrics(traj, dressed_frame(c.params).B.chi);
    prepare_dir(dir);
    auto out = open_output(dir / "timeseries.csv");
    write_timeseries_csv(out, traj, m);
    write_metadata(dir, base_metadata("timeseries", c));
}

void cmd_maxima(const RunConfig& c, const fs::path& dir) {
    const MetricsSeries m = run_point(c.params, c.grid(), c.engine, c.integrator);
    prepare_dir(dir);
    auto out = open_output(dir / "maxima.csv");
    write_maxima_csv(out, m);
    write_metadata(dir, base_metadata("maxima", c));
}

void cmd_sweep(const RunConfig& c, const fs::path& dir) {
    SweepSpec spec;
    spec.base = c.params;
    spec.axes = c.axes;
    spec.grid = c.grid();
    spec.engine = c.engine;
    spec.integrator = c.integrator;
    const SweepResult result = run_sweep(spec, c.threads);
    prepare_dir(dir);
    auto out = open_output(dir / "sweep.csv");
    write_sweep_csv(out, result);

    json meta = base_metadata("sweep", c);
    json axes = json::array();
    for (const SweepAxis& a : c.axes) axes.push_back({{"name", to_string(a.parameter)}, {"values", a.values}});
    meta["axes"] = axes;
    meta["rows"] = result.rows.size();
    write_metadata(dir, meta);
}

void cmd_reproduce(const RunConfig& c, const fs::path& dir) {
    if (c.figure.empty()) throw ConfigError("reproduce needs --figure <fig2..fig11>");
    const FigureSpec& spec = figure_spec(c.figure);
    const std::vector<FigurePanel> panels = figure_pipeline(spec, c.threads);
    prepare_dir(dir);
    json files = json::array();
    for (const FigurePanel& panel : panels) {
        write_text(dir / panel.filename, panel.csv);
        files.push_back(panel.filename);
    }

    json meta;
    meta["artifact"] = "oqb";
    meta["version"] = kVersion;
    meta["command"] = "reproduce";
    meta["figure"] = spec.id;
    meta["description"] = spec.description;
    meta["engine"] = to_string(Engine::closed_form);
    meta["kind"] = spec.kind == FigureKind::time_series ? "time_series" : "maxima_vs_omega_drive";
    meta["params"] = params_json(spec.base);
    meta["family"] = {{"name", to_string(spec.family)}, {"values", spec.family_values}};
    if (!spec.omega_axis.empty()) meta["omega_drive_axis"] = spec.omega_axis;
    meta["grid"] = {{"t_max", spec.t_max}, {"n_points", spec.n_points}};
    meta["defaults_note"] =
        "family values, the drive strength of detuning families (omega_drive = 1) and the "
        "omega_drive axis are artifact defaults; override them with the sweep command";
    meta["files"] = files;
    write_metadata(dir, meta);
}

bool OracleCheckReport::pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

OracleCheckReport cmd_oracle_check(const RunConfig& c, const fs::path& dir) {
    const SystemParams p = validate(c.params);
    const DressedFrame frame = dressed_frame(p);
    const TimeGrid grid = c.grid();
    const DiscretizedBath bath = build_bath(frame, p.lambda, c.oracle);
    IntegratorOptions oracle_opts = c.integrator;
    oracle_opts.rel_tol = std::min(oracle_opts.rel_tol, 1e-10);
    const OracleRun run = propagate(p, frame, bath, grid, oracle_opts);

    OracleCheckReport report;
    report.tolerance = c.oracle_tolerance;
    report.max_norm_deviation = run.max_norm_deviation;
    std::vector<Engine> engines;
    if (p.equal_detunings()) engines.push_back(Engine::closed_form);
    engines.push_back(Engine::pseudomode);
    for (Engine e : engines) {
        const AmplitudeTrajectory traj = compute_trajectory(p, grid, e, c.integrator);
        const double gap = sup_norm_gap(traj, run.trajectory);
        report.entries.push_back({e, gap, gap <= c.oracle_tolerance});
    }

    prepare_dir(dir);
    auto out = open_output(dir / "oracle_check.csv");
    out << "engine,sup_gap,tolerance,status\n";
    for (const auto& e : report.entries) {
        out << to_string(e.engine) << ',' << format_double(e.sup_gap) << ','
            << format_double(report.tolerance) << ',' << (e.pass ? "PASS" : "FAIL") << '\n';
    }
    json meta = base_metadata("oracle-check", c);
    meta["oracle"] = {{"n_modes", c.oracle.n_modes},
                      {"span", c.oracle.span},
                      {"spacing", bath.spacing},
                      {"recurrence_time", bath.recurrence_time()},
                      {"rel_tol", oracle_opts.rel_tol},
                      {"max_norm_deviation", run.max_norm_deviation},
                      {"tolerance", c.oracle_tolerance}};
    write_metadata(dir, meta);
    return report;
}

namespace {

fs::path resolve_out_dir(const RunConfig& c, std::string_view command) {
    if (!c.out_dir.empty()) return c.out_dir;
    const char* root = std::getenv(kOutputRootEnv);
    return fs::path(root && *root ? root : "oqb-out") / std::string(command);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Charging dynamics of a driven open quantum battery in a lossy cavity", "oqb"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.footer(std::string("Output root defaults to $") + kOutputRootEnv +
               "/<command> (or ./oqb-out/<command>) when --out is not given.\n"
               "Exit codes: 0 ok, 2 config error, 3 numerical failure, 4 oracle tolerance failure.");

    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> engine;
    std::optional<double> tol;
    std::optional<unsigned> threads;
    std::vector<std::string> overrides;
    std::string figure;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Flat key = value config file");
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--engine", engine, "closed | pseudomode");
        sub->add_option("--tol", tol, "Integrator relative tolerance");
        sub->add_option("--threads", threads, "Worker threads for sweeps");
        sub->add_option("--set", overrides, "Config override key=value (repeatable)");
    };
    auto* ts = app.add_subcommand("timeseries", "Amplitudes and E_B, P_B, W_B over time");
    auto* mx = app.add_subcommand("maxima", "Maxima of E_B, P_B, W_B over charging time");
    auto* sw = app.add_subcommand("sweep", "Cartesian parameter sweep of the maxima");
    auto* rp = app.add_subcommand("reproduce", "Figure pipeline (fig2 ... fig11)");
    auto* oc = app.add_subcommand("oracle-check", "Compare engines with the discretized bath");
    for (auto* sub : {ts, mx, sw, rp, oc}) add_common(sub);
    rp->add_option("--figure", figure, "Figure id, fig2 ... fig11")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        RunConfig c;
        if (!config_path.empty()) c = load_config(config_path);
        for (const std::string& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
            set_config_value(c, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (out_dir) c.out_dir = *out_dir;
        if (engine) c.engine = engine_from_string(*engine);
        if (tol) set_config_value(c, "tol", format_double(*tol));
        if (threads) c.threads = *threads;
        if (!figure.empty()) c.figure = figure;
        c.params = validate(c.params);
        const fs::path dir = resolve_out_dir(c, command);

        if (command == "timeseries") cmd_timeseries(c, dir);
        else if (command == "maxima") cmd_maxima(c, dir);
        else if (command == "sweep") cmd_sweep(c, dir);
        else if (command == "reproduce") cmd_reproduce(c, dir);
        else {
            const OracleCheckReport report = cmd_oracle_check(c, dir);
            for (const auto& e : report.entries) {
                out << to_string(e.engine) << ": sup gap " << format_double(e.sup_gap)
                    << " (tolerance " << format_double(report.tolerance) << ") "
                    << (e.pass ? "PASS" : "FAIL") << '\n';
            }
            out << "oracle norm deviation " << format_double(report.max_norm_deviation) << '\n';
            if (!report.pass()) {
                err << "oqb: oracle tolerance exceeded\n";
                return exit_oracle;
            }
        }
        out << command << ": wrote " << dir.string() << '\n';
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "oqb " << command << ": configuration error: " << e.what() << '\n';
        return exit_config;
    } catch (const SweepPointError& e) {
        err << "oqb " << command << ": " << e.what() << '\n';
        return e.numerical() ? exit_numerical : exit_config;
    } catch (const NumericalError& e) {
        err << "oqb " << command << ": numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const fs::filesystem_error& e) {
        err << "oqb " << command << ": " << e.what() << '\n';
        return exit_config;
    }
}

} // namespace oqb
