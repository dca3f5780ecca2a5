// Reproduction pipelines for the weak (R = 0.5) and strong (R = 10)
// coupling studies: time series of P_B, E_B, W_B for a family of one parameter,
// or their maxima against the drive strength.
//
// Family values and the drive-strength axis are defaults of this tool and are
// recorded in run.json.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oqb/dynamics.hpp"
#include "oqb/model.hpp"
#include "oqb/sweep.hpp"

namespace oqb {

enum class FigureKind { time_series, maxima_vs_omega };

struct FigureSpec {
    std::string id;
    std::string description;
    FigureKind kind{FigureKind::time_series};
    SystemParams base;
    SweepParameter family{SweepParameter::omega_drive};
    std::vector<double> family_values;
    std::vector<double> omega_axis;  // maxima_vs_omega only
    double t_max{10.0};
    std::size_t n_points{2000};
};

struct FigurePanel {
    std::string filename;
    std::string csv;
};

// fig2 ... fig11.
const std::vector<FigureSpec>& figure_catalog();
// Throws ConfigError for an unknown id.
const FigureSpec& figure_spec(std::string_view id);

// Panels a (power), b (energy), c (ergotropy) as CSV text.
std::vector<FigurePanel> figure_pipeline(const FigureSpec& spec, unsigned threads = 1);

} // namespace oqb
