#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tjcm/dynamics.hpp"

namespace tjcm {

// Dense operator on the truncated product space (field x atom1 x atom2) or
// on the bare field ladder. Deliberately simple; tests and the `validate`
// command are the only consumers.
struct DenseOperator {
  Eigen::MatrixXd matrix;
};

/// Index of |s, f> in the dense product space, s in {0:++, 1:+-, 2:-+, 3:--}.
inline int product_index(int s, int f, int field_dim) { return s * field_dim + f; }

/// Interaction Hamiltonian on the truncated product space with field levels
/// 0..cutoff, assembled from ladder and Pauli raising/lowering operators, in
/// units of the first coupling constant.
DenseOperator build_full_hamiltonian(const CouplingParams& params, int cutoff);

/// exp(-i H T) applied to the initial product state C(n)|n>|+,+> by full
/// eigendecomposition, re-expressed in branch form. The field space spans
/// 0..params.cutoff + 2k, so every populated block is complete.
JointState oracle_evolve(const FieldState& field, const CouplingParams& params, double T);

/// exp(alpha (adag - a)) on the truncated ladder 0..dim-1.
DenseOperator oracle_displacement(double alpha, int dim);

struct ValidationCheck {
  std::string name;
  double max_diff = 0.0;
  bool pass = false;
};

struct ValidationConfig {
  double alpha = 2.0;
  int cutoff = 25;  // evolution cutoff
  double tolerance = 1e-8;
  std::vector<std::pair<int, double>> couplings = {{1, 1.0}, {1, 0.5}, {2, 1.0}};
  std::vector<double> times = {0.7, 3.1, 12.5};
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

/// Compares library evolution, Wigner, phase distribution and both tangles
/// against the dense oracle at each configured coupling.
ValidationReport run_oracle_validation(const ValidationConfig& config);

}  // namespace tjcm
