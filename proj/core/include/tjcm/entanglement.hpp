#pragma once

#include <Eigen/Dense>

#include "tjcm/dynamics.hpp"

namespace tjcm {

enum class Subsystem { Field, Atom1, Atom2, AtomPair };

struct ReducedDensity {
  Eigen::MatrixXcd matrix;
  Subsystem subsystem = Subsystem::Field;
};

/// Field density matrix after tracing out both atoms; dimension
/// (cutoff + 2k + 1)^2.
ReducedDensity reduced_field(const JointState& state);

/// Two-atom 4x4 density matrix after tracing out the field, ordered
/// {|+,+>, |+,->, |-,+>, |-,->}.
ReducedDensity reduced_atoms(const JointState& state);

/// Single-atom 2x2 density matrix, ordered {|+>, |->}; atom is 1 or 2.
ReducedDensity reduced_one_atom(const JointState& state, int atom);

/// Tr rho^2 as the squared Frobenius norm.
double purity(const ReducedDensity& rho);

struct TangleSample {
  double T = 0.0;
  double value = 0.0;
};

/// Field--atoms tangle 2[1 - Tr rho_f^2]; ranges over [0, 2].
TangleSample tangle_field_atoms(const JointState& state);

/// One-atom--remainder tangle 2[1 - Tr rho_A^2]; ranges over [0, 1].
TangleSample tangle_one_atom(const JointState& state, int atom);

// Cross-check paths: the tangles evaluated from the expanded coefficient
// sums rather than a reduced matrix. Used by tests only.
double tangle_field_atoms_expanded(const JointState& state);
double tangle_one_atom_expanded(const JointState& state);

enum class TangleKind { FieldAtoms, OneAtom };

/// Tangle evaluated over a time grid; parallel over samples.
TimeSeries tangle_series(const BlockEvolver& evolver, const std::vector<double>& times,
                         TangleKind kind, int atom = 1);

}  // namespace tjcm
