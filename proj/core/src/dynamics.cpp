#include "tjcm/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tjcm {

namespace {

void check_coupling(const CouplingParams& params) {
  if (params.k < 1) throw std::domain_error("CouplingParams: k must be >= 1");
  if (params.g < 0.0) throw std::domain_error("CouplingParams: g must be >= 0");
  if (params.cutoff < 0) throw std::domain_error("CouplingParams: cutoff must be >= 0");
}

// (n+k)!/n! via log-factorial difference.
double ladder_ratio(int n, int k) {
  return std::exp(log_factorial(n + k) - log_factorial(n));
}

}  // namespace

double rabi_frequency(int n, int k) {
  if (n < 0 || k < 1) throw std::domain_error("rabi_frequency: need n >= 0, k >= 1");
  return std::sqrt(2.0 * ladder_ratio(n, k) + 2.0 * ladder_ratio(n + k, k));
}

Eigen::Matrix4d block_hamiltonian(int n, const CouplingParams& params) {
  if (n < 0) throw std::domain_error("block_hamiltonian: n must be >= 0");
  if (params.k < 1) throw std::domain_error("block_hamiltonian: k must be >= 1");
  const double f1 = std::exp(0.5 * (log_factorial(n + params.k) - log_factorial(n)));
  const double f2 =
      std::exp(0.5 * (log_factorial(n + 2 * params.k) - log_factorial(n + params.k)));
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 1) = params.g * f1;
  h(0, 2) = f1;
  h(1, 3) = f2;
  h(2, 3) = params.g * f2;
  h(1, 0) = h(0, 1);
  h(2, 0) = h(0, 2);
  h(3, 1) = h(1, 3);
  h(3, 2) = h(2, 3);
  return h;
}

BranchAmplitudes evolve_coefficients(int n, const CouplingParams& params, double T) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(block_hamiltonian(n, params));
  const Eigen::Matrix4d& v = solver.eigenvectors();
  const Eigen::Vector4d& w = solver.eigenvalues();
  BranchAmplitudes x{};
  for (int l = 0; l < 4; ++l) {
    const Complex phase = std::exp(Complex(0.0, -w(l) * T)) * v(0, l);
    for (int j = 0; j < 4; ++j) x[j] += v(j, l) * phase;
  }
  return x;
}

BranchAmplitudes evolve_coefficients_symmetric(int n, int k, double T) {
  const double r1 = ladder_ratio(n, k);
  const double r2 = ladder_ratio(n + k, k);
  const double zeta = std::sqrt(2.0 * (r1 + r2));
  const double c = std::cos(T * zeta);
  const double s = std::sin(T * zeta);
  BranchAmplitudes x;
  x[0] = (r1 * c + r2) / (r1 + r2);
  x[1] = Complex(0.0, -std::sqrt(r1) * s / zeta);
  x[2] = x[1];
  x[3] = std::sqrt(r1 * r2) * (c - 1.0) / (r1 + r2);
  return x;
}

double JointState::norm_squared() const {
  double total = 0.0;
  for (const auto& b : branch) {
    for (const Complex& a : b) total += std::norm(a);
  }
  return total;
}

BlockEvolver::BlockEvolver(FieldState field, CouplingParams params)
    : field_(std::move(field)), params_(params) {
  check_coupling(params_);
  if (field_.cutoff < params_.cutoff + 2 * params_.k) {
    throw CutoffError("BlockEvolver: field cutoff " + std::to_string(field_.cutoff) +
                      " below evolution cutoff + 2k = " +
                      std::to_string(params_.cutoff + 2 * params_.k));
  }
  double dropped = 0.0;
  for (int n = params_.cutoff + 1; n <= field_.cutoff; ++n) {
    dropped += field_.coeffs[n] * field_.coeffs[n];
  }
  if (dropped > 1e-12) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", dropped);
    throw CutoffError(std::string("BlockEvolver: coefficient mass ") + buf +
                      " above the evolution cutoff; increase the cutoff");
  }

  vectors_.reserve(params_.cutoff + 1);
  frequencies_.reserve(params_.cutoff + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver;
  for (int n = 0; n <= params_.cutoff; ++n) {
    solver.compute(block_hamiltonian(n, params_));
    vectors_.push_back(solver.eigenvectors());
    frequencies_.push_back(solver.eigenvalues());
  }
}

JointState BlockEvolver::evolve(double T) const {
  JointState state;
  state.T = T;
  state.params = params_;
  const int blocks = params_.cutoff + 1;
  for (auto& b : state.branch) b.assign(blocks, Complex(0.0, 0.0));
  for (int n = 0; n < blocks; ++n) {
    const Eigen::Matrix4d& v = vectors_[n];
    const Eigen::Vector4d& w = frequencies_[n];
    const double c = field_.coeffs[n];
    for (int l = 0; l < 4; ++l) {
      const Complex phase = c * v(0, l) * std::exp(Complex(0.0, -w(l) * T));
      for (int j = 0; j < 4; ++j) state.branch[j][n] += v(j, l) * phase;
    }
  }
  return state;
}

JointState evolve_state(const FieldState& field, const CouplingParams& params, double T) {
  return BlockEvolver(field, params).evolve(T);
}

}  // namespace tjcm
