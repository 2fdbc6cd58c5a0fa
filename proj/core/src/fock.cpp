#include "tjcm/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace tjcm {

namespace {

constexpr int kLogFactorialTable = 4096;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactorialTable + 1);
    t[0] = 0.0;
    for (int i = 1; i <= kLogFactorialTable; ++i) {
      t[i] = t[i - 1] + std::log(static_cast<double>(i));
    }
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: n must be non-negative");
  if (n <= kLogFactorialTable) return log_factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double assoc_laguerre(int n, int a, double x) {
  if (n < 0) throw std::domain_error("assoc_laguerre: n must be non-negative");
  if (a < -n) throw std::domain_error("assoc_laguerre: superscript below -n");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 1.0 + a - x;
  for (int j = 1; j < n; ++j) {
    const double p2 = ((2.0 * j + a + 1.0 - x) * p1 - (j + a) * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double displacement_element(int n, int m, double alpha) {
  if (n < 0 || m < 0) {
    throw std::domain_error("displacement_element: indices must be non-negative");
  }
  if (alpha == 0.0) return n == m ? 1.0 : 0.0;
  const int p = std::min(n, m);
  const int q = std::max(n, m);
  const int d = q - p;
  // <n|D|m> = base^d sqrt(p!/q!) e^{-a^2/2} L_p^d(a^2), base = alpha (n >= m)
  // or -alpha (n < m).
  const double base = n >= m ? alpha : -alpha;
  const double sign = (base < 0.0 && (d % 2 != 0)) ? -1.0 : 1.0;
  const double mag = std::exp(d * std::log(std::abs(base)) +
                              0.5 * (log_factorial(p) - log_factorial(q)) -
                              0.5 * alpha * alpha);
  return sign * mag * assoc_laguerre(p, d, alpha * alpha);
}

double sdn_normalization(const SdnParams& params) {
  const double a2 = params.alpha * params.alpha;
  const double inv2 = 1.0 + params.epsilon * params.epsilon +
                      2.0 * params.epsilon * std::exp(-2.0 * a2) *
                          assoc_laguerre(params.m, 0, 4.0 * a2);
  if (!(inv2 > 1e-14)) {
    throw std::domain_error("sdn_normalization: degenerate superposition");
  }
  return 1.0 / std::sqrt(inv2);
}

FieldState build_sdn_state(const SdnParams& params, int cutoff) {
  if (params.alpha < 0.0) throw std::domain_error("build_sdn_state: alpha must be >= 0");
  if (params.m < 0) throw std::domain_error("build_sdn_state: m must be >= 0");
  if (cutoff < 0) throw std::domain_error("build_sdn_state: cutoff must be >= 0");

  const double lambda = sdn_normalization(params);
  FieldState state;
  state.cutoff = cutoff;
  state.params = params;
  state.coeffs.resize(cutoff + 1);
  double norm = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double c = lambda * (displacement_element(n, params.m, params.alpha) +
                               params.epsilon *
                                   displacement_element(n, params.m, -params.alpha));
    state.coeffs[n] = c;
    norm += c * c;
  }
  if (std::abs(norm - 1.0) > 1e-10) {
    throw CutoffError("build_sdn_state: truncated norm deviates from 1 by " +
                      std::to_string(std::abs(norm - 1.0)) +
                      "; increase the cutoff");
  }
  return state;
}

std::vector<double> photon_distribution(const FieldState& state) {
  std::vector<double> p(state.coeffs.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = state.coeffs[n] * state.coeffs[n];
  return p;
}

double mean_photon(const FieldState& state) {
  double nbar = 0.0;
  for (std::size_t n = 0; n < state.coeffs.size(); ++n) {
    nbar += static_cast<double>(n) * state.coeffs[n] * state.coeffs[n];
  }
  return nbar;
}

int default_field_cutoff(const SdnParams& params, int k) {
  return static_cast<int>(
      std::ceil(params.alpha * params.alpha + 10.0 * params.alpha + params.m + 2 * k + 10));
}

}  // namespace tjcm
