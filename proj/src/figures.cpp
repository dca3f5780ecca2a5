// Figure pipelines built on run_sweep.

#include "oqb/figures.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "oqb/errors.hpp"
#include "oqb/numeric.hpp"

namespace oqb {

namespace {

const std::vector<double> kOmegaFamily{0.0, 0.5, 1.0, 2.0};
const std::vector<double> kDeltaFamily{0.0, 1.0, 3.0, 5.0};
const std::vector<double> kDeltaLFamily{0.0, 2.0, 5.0, 10.0};

std::vector<double> default_omega_axis() {
    std::vector<double> v;
    for (int i = 0; i <= 40; ++i) v.push_back(0.05 * i);
    return v;
}

FigureSpec make(std::string id, std::string description, FigureKind kind, double R,
                SweepParameter family, std::vector<double> values) {
    FigureSpec f;
    f.id = std::move(id);
    f.description = std::move(description);
    f.kind = kind;
    f.base.R = R;
    f.base.omega_drive = 1.0;
    f.base.delta_A = f.base.delta_B = 0.0;
    f.base.delta_L = 0.0;
    f.base.r1 = std::numbers::sqrt2 / 2.0;
    f.base.c01 = 1.0;
    f.base.c02 = 0.0;
    f.family = family;
    f.family_values = std::move(values);
    if (kind == FigureKind::maxima_vs_omega) f.omega_axis = default_omega_axis();
    f.t_max = R > 1.0 ? 5.0 : 10.0;
    return f;
}

std::vector<FigureSpec> build_catalog() {
    using K = FigureKind;
    using P = SweepParameter;
    std::vector<FigureSpec> c;
    for (double R : {0.5, 10.0}) {
        const bool weak = R < 1.0;
        const std::string regime = weak ? "weak coupling R=0.5" : "strong coupling R=10";
        const int o = weak ? 0 : 5;
        c.push_back(make("fig" + std::to_string(2 + o), regime + ", resonance, drive-strength family",
                         K::time_series, R, P::omega_drive, kOmegaFamily));
        c.push_back(make("fig" + std::to_string(3 + o), regime + ", qubit-drive detuning family",
                         K::time_series, R, P::delta_common, kDeltaFamily));
        c.push_back(make("fig" + std::to_string(4 + o), regime + ", drive-cavity detuning family",
                         K::time_series, R, P::delta_L, kDeltaLFamily));
        c.push_back(make("fig" + std::to_string(5 + o), regime + ", maxima vs drive strength, qubit-drive detuning family",
                         K::maxima_vs_omega, R, P::delta_common, kDeltaFamily));
        c.push_back(make("fig" + std::to_string(6 + o), regime + ", maxima vs drive strength, drive-cavity detuning family",
                         K::maxima_vs_omega, R, P::delta_L, kDeltaLFamily));
    }
    std::sort(c.begin(), c.end(), [](const FigureSpec& a, const FigureSpec& b) {
        return std::stoi(a.id.substr(3)) < std::stoi(b.id.substr(3));
    });
    return c;
}

std::string family_label(const FigureSpec& spec, double value) {
    return std::string(to_string(spec.family)) + "=" + format_double(value);
}

} // namespace

const std::vector<FigureSpec>& figure_catalog() {
    static const std::vector<FigureSpec> catalog = build_catalog();
    return catalog;
}

const FigureSpec& figure_spec(std::string_view id) {
    for (const FigureSpec& f : figure_catalog()) {
        if (f.id == id) return f;
    }
    throw ConfigError("unknown figure id '" + std::string(id) + "' (expected fig2 ... fig11)");
}

std::vector<FigurePanel> figure_pipeline(const FigureSpec& spec, unsigned threads) {
    SweepSpec sweep;
    sweep.base = spec.base;
    sweep.grid = TimeGrid::uniform(spec.t_max, spec.n_points);
    sweep.engine = Engine::closed_form;
    sweep.axes.push_back({spec.family, spec.family_values});

    std::ostringstream power, energy, ergotropy;
    const std::size_t n_family = spec.family_values.size();

    if (spec.kind == FigureKind::time_series) {
        sweep.keep_series = true;
        const SweepResult r = run_sweep(sweep, threads);
        for (std::ostringstream* out : {&power, &energy, &ergotropy}) {
            *out << 't';
            for (double v : spec.family_values) *out << ',' << family_label(spec, v);
            *out << '\n';
        }
        for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
            const std::string t = format_double(sweep.grid[i]);
            power << t;
            energy << t;
            ergotropy << t;
            for (std::size_t f = 0; f < n_family; ++f) {
                power << ',' << format_double(r.series[f].power[i]);
                energy << ',' << format_double(r.series[f].energy[i]);
                ergotropy << ',' << format_double(r.series[f].ergotropy[i]);
            }
            power << '\n';
            energy << '\n';
            ergotropy << '\n';
        }
        return {{spec.id + "_a_power.csv", power.str()},
                {spec.id + "_b_energy.csv", energy.str()},
                {spec.id + "_c_ergotropy.csv", ergotropy.str()}};
    }

    sweep.axes.push_back({SweepParameter::omega_drive, spec.omega_axis});
    const SweepResult r = run_sweep(sweep, threads);
    const std::size_t n_omega = spec.omega_axis.size();
    for (std::ostringstream* out : {&power, &energy, &ergotropy}) {
        *out << "omega_drive";
        for (double v : spec.family_values) *out << ',' << family_label(spec, v);
        *out << '\n';
    }
    for (std::size_t w = 0; w < n_omega; ++w) {
        const std::string omega = format_double(spec.omega_axis[w]);
        power << omega;
        energy << omega;
        ergotropy << omega;
        for (std::size_t f = 0; f < n_family; ++f) {
            const SweepRow& row = r.rows[f * n_omega + w];
            power << ',' << format_double(row.power.value);
            energy << ',' << format_double(row.energy.value);
            ergotropy << ',' << format_double(row.ergotropy.value);
        }
        power << '\n';
        energy << '\n';
        ergotropy << '\n';
    }
    return {{spec.id + "_a_max_power.csv", power.str()},
            {spec.id + "_b_max_energy.csv", energy.str()},
            {spec.id + "_c_max_ergotropy.csv", ergotropy.str()}};
}

} // namespace oqb
