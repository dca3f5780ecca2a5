// Energy, power, ergotropy and maxima.

#include "oqb/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "oqb/errors.hpp"

namespace oqb {

double stored_energy(const QubitState& state, double chi) {
    const double p = state.excited_population;
    const double current = 0.5 * chi * (p - state.ground_population());
    const double reference = -0.5 * chi;
    return current - reference;
}

std::vector<double> stored_energy(const AmplitudeTrajectory& traj, double chi) {
    std::vector<double> e(traj.c2.size());
    std::transform(traj.c2.begin(), traj.c2.end(), e.begin(),
                   [chi](const complex& c) { return std::norm(c) * chi; });
    return e;
}

std::vector<double> charging_power(std::span<const double> energy, const TimeGrid& grid) {
    if (energy.size() != grid.size()) throw ConfigError("energy series and grid differ in length");
    std::vector<double> p(energy.size(), 0.0);
    for (std::size_t i = 0; i < energy.size(); ++i) {
        if (grid[i] > 0.0) p[i] = energy[i] / grid[i];
    }
    return p;
}

double ergotropy_closed(double p, double chi) {
    return p > 0.5 ? (2.0 * p - 1.0) * chi : 0.0;
}

std::vector<double> ergotropy_closed(const AmplitudeTrajectory& traj, double chi) {
    std::vector<double> w(traj.c2.size());
    std::transform(traj.c2.begin(), traj.c2.end(), w.begin(),
                   [chi](const complex& c) { return ergotropy_closed(std::norm(c), chi); });
    return w;
}

double ergotropy_spectral(const Spectrum& rho, const Spectrum& h) {
    const Eigen::Index d = rho.values.size();
    if (d == 0 || h.values.size() != d || rho.vectors.rows() != d || rho.vectors.cols() != d ||
        h.vectors.rows() != d || h.vectors.cols() != d) {
        throw ConfigError("ergotropy: spectra must share one dimension");
    }
    constexpr double tol = 1e-12;
    for (Eigen::Index i = 1; i < d; ++i) {
        if (rho.values[i] > rho.values[i - 1] + tol) {
            throw ConfigError("ergotropy: density eigenvalues must be non-increasing");
        }
        if (h.values[i] < h.values[i - 1] - tol) {
            throw ConfigError("ergotropy: Hamiltonian eigenvalues must be non-decreasing");
        }
    }
    if (rho.values.minCoeff() < -tol || std::abs(rho.values.sum() - 1.0) > 1e-9) {
        throw ConfigError("ergotropy: density eigenvalues must be a probability distribution");
    }

    const Eigen::MatrixXd overlap = (rho.vectors.adjoint() * h.vectors).cwiseAbs2();
    double w = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            w += rho.values[i] * h.values[j] * (overlap(i, j) - delta);
        }
    }
    return w;
}

double ergotropy_spectral(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& hamiltonian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rs(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(hamiltonian);
    if (rs.info() != Eigen::Success || hs.info() != Eigen::Success) {
        throw NumericalError("ergotropy: eigen decomposition failed");
    }
    // Eigen sorts ascending; the density spectrum is needed descending.
    Spectrum r{rs.eigenvalues().reverse(), rs.eigenvectors().rowwise().reverse()};
    Spectrum h{hs.eigenvalues(), hs.eigenvectors()};
    return ergotropy_spectral(r, h);
}

double ergotropy_spectral(const QubitState& state, double chi) {
    const double p = state.excited_population;
    Spectrum h{Eigen::Vector2d(-0.5 * chi, 0.5 * chi), Eigen::MatrixXcd::Identity(2, 2)};
    Spectrum r;
    if (p > 0.5) {
        r.values = Eigen::Vector2d(p, 1.0 - p);
        r.vectors = Eigen::MatrixXcd(2, 2);
        r.vectors << 0.0, 1.0,
                     1.0, 0.0;
    } else {
        r.values = Eigen::Vector2d(1.0 - p, p);
        r.vectors = Eigen::MatrixXcd::Identity(2, 2);
    }
    return ergotropy_spectral(r, h);
}

Extremum refine_maximum(std::span<const double> v, const TimeGrid& grid) {
    if (v.empty() || v.size() != grid.size()) {
        throw ConfigError("maxima need a non-empty series aligned with its grid");
    }
    const auto it = std::max_element(v.begin(), v.end());
    const std::size_t i = static_cast<std::size_t>(it - v.begin());
    Extremum best{*it, grid[i]};
    if (i == 0 || i + 1 == v.size()) return best;

    const double t0 = grid[i - 1], t1 = grid[i], t2 = grid[i + 1];
    const double y0 = v[i - 1], y1 = v[i], y2 = v[i + 1];
    // Newton divided differences of the interpolating parabola.
    const double d01 = (y1 - y0) / (t1 - t0);
    const double d12 = (y2 - y1) / (t2 - t1);
    const double curvature = (d12 - d01) / (t2 - t0);
    if (!(curvature < 0.0)) return best;
    const double t_star = 0.5 * (t0 + t1) - d01 / (2.0 * curvature);
    if (!(t_star > t0 && t_star < t2)) return best;
    const double y_star = y0 + d01 * (t_star - t0) + curvature * (t_star - t0) * (t_star - t1);
    if (y_star >= best.value) best = {y_star, t_star};
    return best;
}

MetricsSeries maxima(MetricsSeries s) {
    s.max_energy = refine_maximum(s.energy, s.grid);
    s.max_power = refine_maximum(s.power, s.grid);
    s.max_ergotropy = refine_maximum(s.ergotropy, s.grid);
    return s;
}

MetricsSeries evaluate_metrics(const AmplitudeTrajectory& traj, double chi_B) {
    if (!(chi_B >= 0.0)) throw ConfigError("chi_B must be >= 0");
    MetricsSeries s{traj.grid, stored_energy(traj, chi_B), {}, ergotropy_closed(traj, chi_B),
                    {}, {}, {}};
    s.power = charging_power(s.energy, s.grid);
    return maxima(std::move(s));
}

} // namespace oqb
