// Flat key/value configuration.

#include "oqb/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "oqb/errors.hpp"
#include "oqb/numeric.hpp"

namespace oqb {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) + "'");
}

double to_double(std::string_view key, std::string_view token) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        bad_value(key, token);
    }
    return v;
}

std::size_t to_size(std::string_view key, std::string_view token) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        bad_value(key, token);
    }
    return v;
}

complex to_complex(std::string_view key, std::string_view value) {
    const auto parts = split_list(value);
    if (parts.size() == 1) return {to_double(key, parts[0]), 0.0};
    if (parts.size() == 2) return {to_double(key, parts[0]), to_double(key, parts[1])};
    bad_value(key, value);
}

} // namespace

bool RunConfig::operator==(const RunConfig& o) const {
    return params == o.params && t_max == o.t_max && n_points == o.n_points &&
           engine == o.engine && integrator == o.integrator && threads == o.threads &&
           out_dir == o.out_dir && axes == o.axes && figure == o.figure &&
           oracle.n_modes == o.oracle.n_modes && oracle.span == o.oracle.span &&
           oracle_tolerance == o.oracle_tolerance;
}

void set_config_value(RunConfig& c, std::string_view key, std::string_view value) {
    value = trim(value);
    auto& p = c.params;
    if (key == "delta_A") p.delta_A = to_double(key, value);
    else if (key == "delta_B") p.delta_B = to_double(key, value);
    else if (key == "delta_common") p.delta_A = p.delta_B = to_double(key, value);
    else if (key == "delta_L") p.delta_L = to_double(key, value);
    else if (key == "omega_drive") p.omega_drive = to_double(key, value);
    else if (key == "lambda") p.lambda = to_double(key, value);
    else if (key == "alpha_T") p.alpha_T = to_double(key, value);
    else if (key == "r1") p.r1 = to_double(key, value);
    else if (key == "R") p.R = to_double(key, value);
    else if (key == "c01") p.c01 = to_complex(key, value);
    else if (key == "c02") p.c02 = to_complex(key, value);
    else if (key == "t_max") c.t_max = to_double(key, value);
    else if (key == "n_points") c.n_points = to_size(key, value);
    else if (key == "engine") c.engine = engine_from_string(value);
    else if (key == "tol") c.integrator.rel_tol = to_double(key, value);
    else if (key == "abs_tol") c.integrator.abs_tol = to_double(key, value);
    else if (key == "max_steps_per_sample") c.integrator.max_steps_per_sample = to_size(key, value);
    else if (key == "threads") c.threads = static_cast<unsigned>(to_size(key, value));
    else if (key == "out") c.out_dir = std::string(value);
    else if (key == "figure") c.figure = std::string(value);
    else if (key == "oracle_modes") c.oracle.n_modes = to_size(key, value);
    else if (key == "oracle_span") c.oracle.span = to_double(key, value);
    else if (key == "oracle_tolerance") c.oracle_tolerance = to_double(key, value);
    else if (key.starts_with("axis.")) {
        const SweepParameter param = sweep_parameter_from_string(key.substr(5));
        SweepAxis axis{param, {}};
        for (std::string_view token : split_list(value)) axis.values.push_back(to_double(key, token));
        auto it = std::find_if(c.axes.begin(), c.axes.end(),
                               [param](const SweepAxis& a) { return a.parameter == param; });
        if (it != c.axes.end()) *it = std::move(axis);
        else c.axes.push_back(std::move(axis));
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
    if (!(c.integrator.rel_tol > 0.0) || !(c.integrator.abs_tol > 0.0)) {
        throw ConfigError("integrator tolerances must be > 0");
    }
}

RunConfig parse_config(std::string_view text, RunConfig c) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        try {
            set_config_value(c, trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    const auto& p = c.params;
    auto num = [&out](const char* key, double v) { out << key << " = " << format_double(v) << '\n'; };
    auto cpx = [&out](const char* key, complex v) {
        out << key << " = " << format_double(v.real()) << ", " << format_double(v.imag()) << '\n';
    };
    num("delta_A", p.delta_A);
    num("delta_B", p.delta_B);
    num("delta_L", p.delta_L);
    num("omega_drive", p.omega_drive);
    num("lambda", p.lambda);
    num("alpha_T", p.alpha_T);
    num("r1", p.r1);
    num("R", p.R);
    cpx("c01", p.c01);
    cpx("c02", p.c02);
    num("t_max", c.t_max);
    out << "n_points = " << c.n_points << '\n';
    out << "engine = " << to_string(c.engine) << '\n';
    num("tol", c.integrator.rel_tol);
    num("abs_tol", c.integrator.abs_tol);
    out << "max_steps_per_sample = " << c.integrator.max_steps_per_sample << '\n';
    out << "threads = " << c.threads << '\n';
    if (!c.out_dir.empty()) out << "out = " << c.out_dir << '\n';
    if (!c.figure.empty()) out << "figure = " << c.figure << '\n';
    out << "oracle_modes = " << c.oracle.n_modes << '\n';
    num("oracle_span", c.oracle.span);
    num("oracle_tolerance", c.oracle_tolerance);
    for (const SweepAxis& axis : c.axes) {
        out << "axis." << to_string(axis.parameter) << " =";
        for (std::size_t i = 0; i < axis.values.size(); ++i) {
            out << (i ? ", " : " ") << format_double(axis.values[i]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace oqb
