#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "tjcm/fock.hpp"
#include "tjcm/types.hpp"

namespace tjcm {

using Complex = std::complex<double>;

/// Two-atom Rabi frequency zeta_n = sqrt(2 (n+k)!/n! + 2 (n+2k)!/(n+k)!),
/// computed through log-factorial differences.
double rabi_frequency(int n, int k);

/// Interaction-picture block of the excitation manifold n, in units of the
/// first coupling constant, in the ordered basis
/// {|+,+,n>, |+,-,n+k>, |-,+,n+k>, |-,-,n+2k>}.
Eigen::Matrix4d block_hamiltonian(int n, const CouplingParams& params);

// (X1, X2, X3, X4) at a fixed block.
using BranchAmplitudes = std::array<Complex, 4>;

/// exp(-i H_block T) applied to (1,0,0,0) via spectral decomposition of the
/// real-symmetric block. Valid for any g and either sign of T.
BranchAmplitudes evolve_coefficients(int n, const CouplingParams& params, double T);

/// Closed-form coefficients of the symmetric case g = 1.
BranchAmplitudes evolve_coefficients_symmetric(int n, int k, double T);

// Joint field--two-atom state at scaled time T, stored as the four branch
// amplitude vectors A_j(n) = C(n,m) X_j(T,n,k) over the evolved blocks
// n = 0..cutoff. Branch j pairs with the field shift {0, k, k, 2k}[j].
struct JointState {
  double T = 0.0;
  CouplingParams params;
  std::array<std::vector<Complex>, 4> branch;

  int block_count() const { return static_cast<int>(branch[0].size()); }
  int branch_shift(int j) const { return j == 0 ? 0 : (j == 3 ? 2 * params.k : params.k); }
  // Largest populated field index, cutoff + 2k.
  int field_dim() const { return block_count() + 2 * params.k; }
  double norm_squared() const;
};

// Holds the per-block eigensystems so that many evolution times reuse one
// diagonalization per block.
class BlockEvolver {
 public:
  // Requires field.cutoff >= params.cutoff + 2k (headroom for the k-photon
  // ladder) and negligible coefficient mass above params.cutoff; throws
  // CutoffError otherwise.
  BlockEvolver(FieldState field, CouplingParams params);

  JointState evolve(double T) const;

  const FieldState& field() const { return field_; }
  const CouplingParams& params() const { return params_; }

 private:
  FieldState field_;
  CouplingParams params_;
  std::vector<Eigen::Matrix4d> vectors_;
  std::vector<Eigen::Vector4d> frequencies_;
};

/// One-shot evolution; equivalent to BlockEvolver(field, params).evolve(T).
JointState evolve_state(const FieldState& field, const CouplingParams& params, double T);

}  // namespace tjcm
