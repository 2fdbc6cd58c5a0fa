#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "tjcm/entanglement.hpp"
#include "tjcm/observables.hpp"

using namespace tjcm;

namespace {

BlockEvolver make_evolver(const SdnParams& sdn, int k, double g, int nc) {
  return BlockEvolver(build_sdn_state(sdn, nc + 2 * k), CouplingParams{k, g, nc});
}

}  // namespace

TEST_CASE("reduced densities at T=0") {
  const BlockEvolver evolver = make_evolver({2.0, 0.0, 0}, 1, 1.0, 34);
  const JointState state = evolver.evolve(0.0);
  CHECK(purity(reduced_field(state)) == doctest::Approx(1.0).epsilon(1e-10));
  const ReducedDensity atom = reduced_one_atom(state, 1);
  CHECK(std::abs(atom.matrix(0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(atom.matrix(1, 1)) < 1e-12);
  CHECK(std::abs(atom.matrix(0, 1)) < 1e-12);
  CHECK(tangle_field_atoms(state).value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(tangle_one_atom(state, 1).value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(tangle_one_atom(state, 2).value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("reduced density invariants at generic times") {
  const BlockEvolver evolver = make_evolver({2.0, 1.0, 1}, 2, 0.7, 30);
  for (double t : {0.9, 4.4, 18.0}) {
    const JointState state = evolver.evolve(t);
    const ReducedDensity rho = reduced_field(state);
    CAPTURE(t);
    CHECK((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(rho.matrix.trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(rho.matrix.trace().imag()) < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix);
    CHECK(solver.eigenvalues().minCoeff() > -1e-10);
    // the field density of this model is real symmetric
    CHECK(rho.matrix.imag().cwiseAbs().maxCoeff() < 1e-12);

    const ReducedDensity atoms = reduced_atoms(state);
    CHECK((atoms.matrix - atoms.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(atoms.matrix.trace().real() - 1.0) < 1e-10);
    // Schmidt symmetry of the pure global state
    CHECK(std::abs(purity(rho) - purity(atoms)) < 1e-9);
    // eigenvalues of the field density sum to the trace
    CHECK(std::abs(solver.eigenvalues().sum() - 1.0) < 1e-10);
  }
}

TEST_CASE("tangle bounds and atom exchange symmetry") {
  for (double g : {0.5, 1.0}) {
    const BlockEvolver evolver = make_evolver({3.0, -1.0, 0}, 1, g, 49);
    for (double t : {0.5, 3.0, 11.0, 47.0}) {
      const JointState state = evolver.evolve(t);
      const double fa = tangle_field_atoms(state).value;
      const double a1 = tangle_one_atom(state, 1).value;
      const double a2 = tangle_one_atom(state, 2).value;
      CAPTURE(g); CAPTURE(t);
      CHECK(fa >= -1e-9);
      CHECK(fa <= 2.0 + 1e-9);
      CHECK(a1 >= -1e-9);
      CHECK(a1 <= 1.0 + 1e-9);
      CHECK(a2 <= 1.0 + 1e-9);
      if (g == 1.0) CHECK(std::abs(a1 - a2) < 1e-9);
    }
  }
}

TEST_CASE("maximally mixed qubit gives unit tangle") {
  ReducedDensity rho{Eigen::MatrixXcd::Identity(2, 2) * 0.5, Subsystem::Atom1};
  CHECK(2.0 * (1.0 - purity(rho)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("expanded coefficient sums match the purity path for g=1") {
  for (int k : {1, 2}) {
    const BlockEvolver evolver = make_evolver({2.0, 0.0, 0}, k, 1.0, 34);
    for (double t : {0.8, 6.5, 21.0}) {
      const JointState state = evolver.evolve(t);
      CAPTURE(k); CAPTURE(t);
      CHECK(std::abs(tangle_field_atoms_expanded(state) -
                     tangle_field_atoms(state).value) < 1e-6);
      CHECK(std::abs(tangle_one_atom_expanded(state) -
                     tangle_one_atom(state, 1).value) < 1e-6);
    }
  }
}

TEST_CASE("near disentanglement of the k=2 strong field at multiples of pi") {
  const double pi = std::acos(-1.0);
  const BlockEvolver evolver = make_evolver({7.0, 0.0, 0}, 2, 1.0, 129);
  CHECK(tangle_field_atoms(evolver.evolve(pi)).value < 0.1);
  CHECK(std::abs(tangle_field_atoms(evolver.evolve(pi / 2.0)).value - 1.0) < 0.05);
}

TEST_CASE("tangle series matches pointwise evaluation") {
  const BlockEvolver evolver = make_evolver({2.0, 0.0, 0}, 1, 0.5, 34);
  std::vector<double> times;
  for (int i = 0; i <= 40; ++i) times.push_back(0.5 * i);
  const TimeSeries fa = tangle_series(evolver, times, TangleKind::FieldAtoms);
  const TimeSeries ar = tangle_series(evolver, times, TangleKind::OneAtom, 2);
  for (std::size_t i = 0; i < times.size(); i += 7) {
    const JointState state = evolver.evolve(times[i]);
    CHECK(fa.values[i] == doctest::Approx(tangle_field_atoms(state).value).epsilon(1e-12));
    CHECK(ar.values[i] == doctest::Approx(tangle_one_atom(state, 2).value).epsilon(1e-12));
  }
}
