#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tjcm/dynamics.hpp"

namespace tjcm {

/// Total atomic inversion (half-sum over the two atoms); value in [-1, 1].
double atomic_inversion(const JointState& state);

/// Strong-intensity approximation sum_n P(n) cos(2T sqrt(n + 3/2)),
/// valid for the symmetric case with alpha >> 1 but callable anywhere.
double atomic_inversion_asymptotic(const FieldState& field, double T);

/// Analytic revival-time estimate 2 pi sqrt(nbar + 3/2).
double revival_time(const FieldState& field);

TimeSeries inversion_series(const BlockEvolver& evolver, const std::vector<double>& times);
TimeSeries inversion_series_asymptotic(const FieldState& field,
                                       const std::vector<double>& times);

struct WignerGrid {
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  Eigen::MatrixXd values;  // values(ix, iy) = W(x_axis[ix], y_axis[iy])
  double T = 0.0;
  double max_imag_residue = 0.0;  // largest |Im| discarded from the sums
  bool boundary_warning = false;  // |W| > 1e-6 somewhere on the grid edge

  double integral() const;  // Riemann sum over the grid
};

/// W(x, y) of the reduced field state, evaluated from the branch-resolved
/// double sum over Fock indices (field shifts k and 2k applied per branch).
WignerGrid wigner(const JointState& state, const GridSpec& grid);

/// Standard Fock-basis Wigner transform of a given field density matrix.
WignerGrid wigner_of_density(const Eigen::MatrixXcd& rho, const GridSpec& grid,
                             double T = 0.0);

/// Strong-intensity closed form: three Gaussian components plus the
/// interference part, with eta = T/sqrt(nbar), nbar = alpha^2.
WignerGrid wigner_asymptotic(double alpha, double T, const GridSpec& grid);

struct PhaseDistribution {
  std::vector<double> thetas;  // [-pi, pi], inclusive ends
  std::vector<double> values;
  double theta_ref = 0.0;

  double integral() const;  // trapezoid over [-pi, pi]
};

/// Phase distribution P(Theta) of the reduced field state, summed over the
/// four orthogonal atomic branches; non-negative by construction and
/// normalized over [-pi, pi]. Requires n_thetas >= 64.
PhaseDistribution phase_distribution(const JointState& state, int n_thetas);

struct Peak {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Grid-local maxima above `threshold`, reduced by non-maximum suppression
/// with the given minimum separation; sorted by descending value.
std::vector<Peak> find_peaks(const WignerGrid& grid, double threshold,
                             double min_separation);

/// sqrt(2) alpha + 5, covering the displaced support.
double default_grid_radius(double alpha);

}  // namespace tjcm
