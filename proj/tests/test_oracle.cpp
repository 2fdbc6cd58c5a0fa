#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "tjcm/oracle.hpp"

using namespace tjcm;

TEST_CASE("full hamiltonian embeds the excitation blocks") {
  const CouplingParams params{1, 0.8, 2};
  const DenseOperator h = build_full_hamiltonian(params, 2);
  REQUIRE(h.matrix.rows() == 12);
  CHECK((h.matrix - h.matrix.transpose()).norm() == 0.0);

  const Eigen::Matrix4d block = block_hamiltonian(0, params);
  const int fd = 3;
  const int idx[4] = {product_index(0, 0, fd), product_index(1, 1, fd),
                      product_index(2, 1, fd), product_index(3, 2, fd)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(h.matrix(idx[i], idx[j]) == doctest::Approx(block(i, j)).epsilon(1e-14));
    }
  }

  const DenseOperator solo = build_full_hamiltonian(CouplingParams{1, 0.0, 2}, 2);
  // g=0 removes every atom-2 transition |s1,+> <-> |s1,->
  for (int f = 0; f < fd; ++f) {
    for (int fp = 0; fp < fd; ++fp) {
      CHECK(solo.matrix(product_index(1, f, fd), product_index(0, fp, fd)) == 0.0);
      CHECK(solo.matrix(product_index(3, f, fd), product_index(2, fp, fd)) == 0.0);
    }
  }
}

TEST_CASE("displacement oracle") {
  SUBCASE("alpha = 0 is the identity") {
    const DenseOperator d = oracle_displacement(0.0, 8);
    CHECK((d.matrix - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("column m=0 carries the coherent amplitudes") {
    const double alpha = 1.3;
    const DenseOperator d = oracle_displacement(alpha, 40);
    for (int n = 0; n <= 12; ++n) {
      const double expected = std::exp(-0.5 * alpha * alpha + n * std::log(alpha) -
                                       0.5 * log_factorial(n));
      CHECK(d.matrix(n, 0) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
  SUBCASE("closed form agrees with the matrix exponential") {
    for (double alpha : {0.3, 1.0, 4.0, 8.0}) {
      // headroom past the classical support edge of the m = 40 column
      const double edge = (std::sqrt(40.0) + alpha) * (std::sqrt(40.0) + alpha);
      const int dim = std::min(200, static_cast<int>(edge + 10.0 * alpha + 30.0));
      const DenseOperator d = oracle_displacement(alpha, dim);
      double worst = 0.0;
      for (int n = 0; n <= 40; ++n) {
        for (int m = 0; m <= 40; ++m) {
          worst = std::max(worst,
                           std::abs(d.matrix(n, m) - displacement_element(n, m, alpha)));
        }
      }
      CAPTURE(alpha);
      CHECK(worst < 1e-8);
    }
    CHECK(oracle_displacement(0.5, 30).matrix(2, 1) ==
          doctest::Approx(0.5460171011694801).epsilon(1e-10));
  }
  SUBCASE("group property on the bulk") {
    const DenseOperator da = oracle_displacement(0.9, 80);
    const DenseOperator db = oracle_displacement(1.4, 80);
    const DenseOperator dab = oracle_displacement(2.3, 80);
    const Eigen::MatrixXd prod = da.matrix * db.matrix;
    double worst = 0.0;
    for (int n = 0; n <= 40; ++n) {
      for (int m = 0; m <= 40; ++m) {
        worst = std::max(worst, std::abs(prod(n, m) - dab.matrix(n, m)));
      }
    }
    CHECK(worst < 1e-6);
  }
  SUBCASE("bulk columns are orthonormal") {
    const DenseOperator d = oracle_displacement(2.0, 80);
    for (int m = 0; m <= 40; ++m) {
      CHECK(d.matrix.col(m).squaredNorm() == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(std::abs(d.matrix.col(3).dot(d.matrix.col(17))) < 1e-8);
  }
}

TEST_CASE("oracle evolution against the block path") {
  const SdnParams sdn{2.0, 0.0, 0};
  SUBCASE("T = 0 returns the initial state") {
    const CouplingParams params{1, 1.0, 30};
    const FieldState field = build_sdn_state(sdn, 32);
    const JointState state = oracle_evolve(field, params, 0.0);
    for (int n = 0; n <= 30; ++n) {
      CHECK(std::abs(state.branch[0][n] - field.coeffs[n]) < 1e-10);
    }
  }
  SUBCASE("norm is conserved") {
    const CouplingParams params{2, 0.5, 28};
    const FieldState field = build_sdn_state(sdn, 32);
    for (double t : {1.0, 5.0, 20.0}) {
      CHECK(std::abs(oracle_evolve(field, params, t).norm_squared() - 1.0) < 1e-8);
    }
  }
  SUBCASE("matches evolve_state") {
    for (auto [k, g, t] : {std::tuple{1, 1.0, 3.0}, std::tuple{2, 0.5, 5.0}}) {
      const CouplingParams params{k, g, 28};
      const FieldState field = build_sdn_state(sdn, 28 + 2 * k);
      const JointState lib = evolve_state(field, params, t);
      const JointState ora = oracle_evolve(field, params, t);
      double worst = 0.0;
      for (int j = 0; j < 4; ++j) {
        for (int n = 0; n <= 28; ++n) {
          worst = std::max(worst, std::abs(lib.branch[j][n] - ora.branch[j][n]));
        }
      }
      CAPTURE(k); CAPTURE(g);
      CHECK(worst < 1e-8);
    }
  }
  SUBCASE("matches the g=1 closed form") {
    const CouplingParams params{1, 1.0, 30};
    const FieldState field = build_sdn_state(sdn, 32);
    for (double t : {2.0, 11.0, 20.0}) {
      const JointState ora = oracle_evolve(field, params, t);
      double worst = 0.0;
      for (int n = 0; n <= 30; ++n) {
        const BranchAmplitudes x = evolve_coefficients_symmetric(n, 1, t);
        for (int j = 0; j < 4; ++j) {
          worst = std::max(worst, std::abs(ora.branch[j][n] - field.coeffs[n] * x[j]));
        }
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("validation sweep passes at the default tolerance") {
  const ValidationReport report = run_oracle_validation(ValidationConfig{});
  CHECK(report.checks.size() == 15);
  for (const auto& check : report.checks) {
    CAPTURE(check.name);
    CAPTURE(check.max_diff);
    CHECK(check.pass);
  }
  CHECK(report.all_pass());
}
