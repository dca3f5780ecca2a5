// Figures of merit of the battery: stored energy, average charging
// power and ergotropy, plus their maxima over charging time.

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "oqb/dynamics.hpp"

namespace oqb {

struct Extremum {
    double value{0.0};
    double time{0.0};
};

struct MetricsSeries {
    TimeGrid grid;
    std::vector<double> energy;
    std::vector<double> power;
    std::vector<double> ergotropy;
    Extremum max_energy;
    Extremum max_power;
    Extremum max_ergotropy;
};

// Diagonal qubit state in the dressed basis of the battery.
struct QubitState {
    double excited_population{0.0};
    double ground_population() const { return 1.0 - excited_population; }
};

// Tr[H rho] - Tr[H rho_ground] with H = (chi/2)(|E><E| - |G><G|).
double stored_energy(const QubitState& state, double chi);

// |C2(t)|^2 chi per sample.
std::vector<double> stored_energy(const AmplitudeTrajectory& traj, double chi);

// E(t)/t, with the t = 0 limit defined as 0.
std::vector<double> charging_power(std::span<const double> energy, const TimeGrid& grid);

// (2p - 1) Theta(p - 1/2) chi with Theta(0) = 0.
double ergotropy_closed(double excited_population, double chi);
std::vector<double> ergotropy_closed(const AmplitudeTrajectory& traj, double chi);

// Spectral data of a Hermitian operator: eigenvalues with eigenvectors as columns.
struct Spectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

// W = sum_ij r_i e_j (|<r_i|e_j>|^2 - delta_ij). Expects rho eigenvalues in
// non-increasing order summing to 1 and Hamiltonian eigenvalues in
// non-decreasing order; throws ConfigError otherwise.
double ergotropy_spectral(const Spectrum& rho, const Spectrum& hamiltonian);

// Diagonalizes both operators, orders the spectra and applies the form above.
double ergotropy_spectral(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& hamiltonian);

// Two-level special case in the dressed basis {|G>, |E>}.
double ergotropy_spectral(const QubitState& state, double chi);

// Grid argmax (first occurrence), refined by the parabola through the
// neighbouring samples when the maximum is interior.
Extremum refine_maximum(std::span<const double> values, const TimeGrid& grid);

// Fills the max_* fields.
MetricsSeries maxima(MetricsSeries series);

// Energy, power, ergotropy and their maxima for the battery amplitude C2.
MetricsSeries evaluate_metrics(const AmplitudeTrajectory& traj, double chi_B);

} // namespace oqb
