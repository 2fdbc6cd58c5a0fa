#include "tjcm/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "tjcm/entanglement.hpp"
#include "tjcm/observables.hpp"

namespace tjcm {

namespace {

constexpr int kDenseCutoffLimit = 200;

}  // namespace

DenseOperator build_full_hamiltonian(const CouplingParams& params, int cutoff) {
  if (params.k < 1) throw std::domain_error("build_full_hamiltonian: k must be >= 1");
  if (cutoff < 0 || cutoff > kDenseCutoffLimit) {
    throw std::domain_error("build_full_hamiltonian: cutoff outside dense range");
  }
  const int fd = cutoff + 1;
  const int k = params.k;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(4 * fd, 4 * fd);
  for (int n = 0; n + k <= cutoff; ++n) {
    const double f = std::exp(0.5 * (log_factorial(n + k) - log_factorial(n)));
    // adag^k sigma1^-: |+,s2,n> -> |-,s2,n+k>
    h(product_index(2, n + k, fd), product_index(0, n, fd)) += f;
    h(product_index(3, n + k, fd), product_index(1, n, fd)) += f;
    // adag^k sigma2^-: |s1,+,n> -> |s1,-,n+k>, weighted by g
    h(product_index(1, n + k, fd), product_index(0, n, fd)) += params.g * f;
    h(product_index(3, n + k, fd), product_index(2, n, fd)) += params.g * f;
  }
  Eigen::MatrixXd full = h + h.transpose();
  return {std::move(full)};
}

JointState oracle_evolve(const FieldState& field, const CouplingParams& params, double T) {
  const int nc = params.cutoff;
  const int field_top = nc + 2 * params.k;
  if (field.cutoff < nc) {
    throw CutoffError("oracle_evolve: field cutoff below evolution cutoff");
  }
  if (field_top > kDenseCutoffLimit) {
    throw std::domain_error("oracle_evolve: cutoff outside dense range");
  }
  const int fd = field_top + 1;
  const DenseOperator h = build_full_hamiltonian(params, field_top);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  const Eigen::MatrixXd& v = solver.eigenvectors();
  const Eigen::VectorXd& w = solver.eigenvalues();

  Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(4 * fd);
  for (int n = 0; n <= nc; ++n) psi0(product_index(0, n, fd)) = field.coeffs[n];

  const Eigen::VectorXd modes = v.transpose() * psi0;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4 * fd);
  for (int l = 0; l < 4 * fd; ++l) {
    psi += (modes(l) * std::exp(Complex(0.0, -w(l) * T))) * v.col(l);
  }

  JointState state;
  state.T = T;
  state.params = params;
  for (auto& b : state.branch) b.assign(nc + 1, Complex(0.0, 0.0));
  for (int n = 0; n <= nc; ++n) {
    state.branch[0][n] = psi(product_index(0, n, fd));
    state.branch[1][n] = psi(product_index(1, n + params.k, fd));
    state.branch[2][n] = psi(product_index(2, n + params.k, fd));
    state.branch[3][n] = psi(product_index(3, n + 2 * params.k, fd));
  }
  return state;
}

DenseOperator oracle_displacement(double alpha, int dim) {
  if (dim < 1 || dim > kDenseCutoffLimit + 1) {
    throw std::domain_error("oracle_displacement: dim outside dense range");
  }
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    const double f = std::sqrt(n + 1.0);
    gen(n + 1, n) += alpha * f;   // adag
    gen(n, n + 1) -= alpha * f;   // -a
  }
  Eigen::MatrixXd d = gen.exp();
  return {std::move(d)};
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ValidationReport run_oracle_validation(const ValidationConfig& config) {
  ValidationReport report;
  const auto record = [&](const std::string& name, double diff) {
    report.checks.push_back({name, diff, diff < config.tolerance});
  };

  for (const auto& [k, g] : config.couplings) {
    CouplingParams params{k, g, config.cutoff};
    const SdnParams sdn{config.alpha, 0.0, 0};
    const FieldState field = build_sdn_state(sdn, config.cutoff + 2 * k);
    const BlockEvolver evolver(field, params);
    const std::string tag = "k=" + std::to_string(k) + " g=" + std::to_string(g).substr(0, 3);

    double amp_diff = 0.0, tangle_fa_diff = 0.0, tangle_oa_diff = 0.0;
    double wigner_diff = 0.0, phase_diff = 0.0;
    for (double t : config.times) {
      const JointState lib = evolver.evolve(t);
      const JointState ora = oracle_evolve(field, params, t);
      for (int j = 0; j < 4; ++j) {
        for (int n = 0; n <= config.cutoff; ++n) {
          amp_diff = std::max(amp_diff, std::abs(lib.branch[j][n] - ora.branch[j][n]));
        }
      }
      tangle_fa_diff = std::max(tangle_fa_diff,
                                std::abs(tangle_field_atoms(lib).value -
                                         tangle_field_atoms(ora).value));
      for (int atom : {1, 2}) {
        tangle_oa_diff = std::max(tangle_oa_diff,
                                  std::abs(tangle_one_atom(lib, atom).value -
                                           tangle_one_atom(ora, atom).value));
      }
      const GridSpec grid{21, default_grid_radius(config.alpha)};
      const WignerGrid wl = wigner(lib, grid);
      const WignerGrid wo = wigner(ora, grid);
      wigner_diff = std::max(wigner_diff, (wl.values - wo.values).cwiseAbs().maxCoeff());
      const PhaseDistribution pl = phase_distribution(lib, 181);
      const PhaseDistribution po = phase_distribution(ora, 181);
      for (std::size_t i = 0; i < pl.values.size(); ++i) {
        phase_diff = std::max(phase_diff, std::abs(pl.values[i] - po.values[i]));
      }
    }
    record("evolution " + tag, amp_diff);
    record("wigner " + tag, wigner_diff);
    record("phase " + tag, phase_diff);
    record("tangle-fa " + tag, tangle_fa_diff);
    record("tangle-ar " + tag, tangle_oa_diff);
  }
  return report;
}

}  // namespace tjcm
