#include "tjcm/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "tjcm/parallel.hpp"

namespace tjcm {

namespace {

// Branch amplitude with out-of-range indices treated as zero.
inline Complex amp(const JointState& s, int j, int n) {
  if (n < 0 || n >= s.block_count()) return Complex(0.0, 0.0);
  return s.branch[j][n];
}

}  // namespace

ReducedDensity reduced_field(const JointState& state) {
  const int blocks = state.block_count();
  const int dim = state.field_dim() + 1;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < 4; ++j) {
    const int s = state.branch_shift(j);
    for (int n = 0; n < blocks; ++n) {
      const Complex a = state.branch[j][n];
      if (a == Complex(0.0, 0.0)) continue;
      for (int np = 0; np < blocks; ++np) {
        rho(n + s, np + s) += a * std::conj(state.branch[j][np]);
      }
    }
  }
  return {std::move(rho), Subsystem::Field};
}

ReducedDensity reduced_atoms(const JointState& state) {
  const int blocks = state.block_count();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  for (int j = 0; j < 4; ++j) {
    for (int jp = 0; jp < 4; ++jp) {
      const int offset = state.branch_shift(j) - state.branch_shift(jp);
      Complex sum(0.0, 0.0);
      for (int n = 0; n < blocks; ++n) {
        sum += state.branch[j][n] * std::conj(amp(state, jp, n + offset));
      }
      rho(j, jp) = sum;
    }
  }
  return {std::move(rho), Subsystem::AtomPair};
}

ReducedDensity reduced_one_atom(const JointState& state, int atom) {
  if (atom != 1 && atom != 2) {
    throw std::domain_error("reduced_one_atom: atom must be 1 or 2");
  }
  const int blocks = state.block_count();
  const int k = state.params.k;
  // Branches with the chosen atom excited / de-excited, and the pairings
  // contributing to <+|rho|->: (upper branch at n + k, lower branch at n).
  const int up0 = 0;
  const int up1 = atom == 1 ? 1 : 2;
  const int dn0 = atom == 1 ? 2 : 1;
  const int dn1 = 3;
  double p_up = 0.0, p_dn = 0.0;
  Complex off(0.0, 0.0);
  for (int n = 0; n < blocks; ++n) {
    p_up += std::norm(state.branch[up0][n]) + std::norm(state.branch[up1][n]);
    p_dn += std::norm(state.branch[dn0][n]) + std::norm(state.branch[dn1][n]);
    off += amp(state, up0, n + k) * std::conj(state.branch[dn0][n]) +
           amp(state, up1, n + k) * std::conj(state.branch[dn1][n]);
  }
  Eigen::MatrixXcd rho(2, 2);
  rho(0, 0) = p_up;
  rho(1, 1) = p_dn;
  rho(0, 1) = off;
  rho(1, 0) = std::conj(off);
  return {std::move(rho), atom == 1 ? Subsystem::Atom1 : Subsystem::Atom2};
}

double purity(const ReducedDensity& rho) { return rho.matrix.squaredNorm(); }

TangleSample tangle_field_atoms(const JointState& state) {
  return {state.T, 2.0 * (1.0 - purity(reduced_atoms(state)))};
}

TangleSample tangle_one_atom(const JointState& state, int atom) {
  return {state.T, 2.0 * (1.0 - purity(reduced_one_atom(state, atom)))};
}

double tangle_field_atoms_expanded(const JointState& state) {
  const int k = state.params.k;
  const int dim = state.field_dim() + 1;
  double sum = 0.0;
  for (int n = 0; n < dim; ++n) {
    for (int np = 0; np < dim; ++np) {
      const Complex brace =
          amp(state, 0, n) * std::conj(amp(state, 0, np)) +
          amp(state, 1, n - k) * std::conj(amp(state, 1, np - k)) +
          amp(state, 2, n - k) * std::conj(amp(state, 2, np - k)) +
          amp(state, 3, n - 2 * k) * std::conj(amp(state, 3, np - 2 * k));
      sum += std::norm(brace);
    }
  }
  return 2.0 - 2.0 * sum;
}

double tangle_one_atom_expanded(const JointState& state) {
  const int blocks = state.block_count();
  const int k = state.params.k;
  double p_up = 0.0, p_dn = 0.0;
  Complex off(0.0, 0.0);
  for (int n = 0; n < blocks; ++n) {
    p_up += std::norm(state.branch[0][n]) + std::norm(state.branch[2][n]);
    p_dn += std::norm(state.branch[1][n]) + std::norm(state.branch[3][n]);
    off += amp(state, 0, n + k) * std::conj(state.branch[1][n]) +
           amp(state, 2, n + k) * std::conj(state.branch[3][n]);
  }
  return 2.0 - 2.0 * (p_up * p_up + p_dn * p_dn + 2.0 * std::norm(off));
}

TimeSeries tangle_series(const BlockEvolver& evolver, const std::vector<double>& times,
                         TangleKind kind, int atom) {
  TimeSeries series;
  series.times = times;
  series.values.assign(times.size(), 0.0);
  parallel_for(0, times.size(), [&](std::size_t i) {
    const JointState state = evolver.evolve(times[i]);
    series.values[i] = kind == TangleKind::FieldAtoms
                           ? tangle_field_atoms(state).value
                           : tangle_one_atom(state, atom).value;
  });
  return series;
}

}  // namespace tjcm
