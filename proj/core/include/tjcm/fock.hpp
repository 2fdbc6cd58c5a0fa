#pragma once

#include <vector>

#include "tjcm/types.hpp"

namespace tjcm {

/// ln(n!), exact for n <= 1 and monotone non-decreasing.
double log_factorial(int n);

/// Associated Laguerre polynomial L_n^a(x) by the three-term recurrence in n.
/// Negative integer a is accepted down to a = -n; below that the polynomial
/// family is not defined and a std::domain_error is thrown.
double assoc_laguerre(int n, int a, double x);

/// Displacement matrix element <n|D(alpha)|m> for real alpha.
/// Satisfies <n|D(-alpha)|m> = (-1)^(n-m) <n|D(alpha)|m>.
double displacement_element(int n, int m, double alpha);

/// Normalization constant of the two-displacement superposition.
/// Throws std::domain_error when the superposition is degenerate (zero norm).
double sdn_normalization(const SdnParams& params);

// Truncated coefficient vector of the initial field state. Coefficients are
// real because the displacement amplitude is real.
struct FieldState {
  std::vector<double> coeffs;  // C(n,m) for n = 0..cutoff
  int cutoff = 0;
  SdnParams params;
};

/// Builds C(n,m) = lambda_eps [<n|D(alpha)|m> + eps <n|D(-alpha)|m>] up to
/// the cutoff. Throws CutoffError when the truncated norm deviates from 1 by
/// more than 1e-10 (cutoff too small for the requested state).
FieldState build_sdn_state(const SdnParams& params, int cutoff);

/// P(n) = |C(n,m)|^2.
std::vector<double> photon_distribution(const FieldState& state);

/// Mean photon number of the truncated state.
double mean_photon(const FieldState& state);

/// Fock-space cutoff covering the Poissonian tail plus the k-photon ladder
/// shifts: ceil(alpha^2 + 10 alpha + m + 2k + 10).
int default_field_cutoff(const SdnParams& params, int k);

}  // namespace tjcm
