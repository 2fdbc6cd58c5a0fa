#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tjcm/fock.hpp"

using namespace tjcm;

namespace {

// Finite-series oracle: L_n^a(x) = sum_j (-1)^j C(n+a, n-j) x^j / j!.
// Reports the largest term so callers can bound the cancellation error.
double laguerre_series(int n, int a, double x, double* max_term = nullptr) {
  double sum = 0.0;
  if (max_term) *max_term = 0.0;
  for (int j = 0; j <= n; ++j) {
    double binom = 1.0;
    for (int i = 1; i <= n - j; ++i) binom *= (a + j + i) / static_cast<double>(i);
    double term = binom;
    for (int i = 1; i <= j; ++i) term *= -x / i;
    sum += term;
    if (max_term) *max_term = std::max(*max_term, std::abs(term));
  }
  return sum;
}

}  // namespace

TEST_CASE("log_factorial small values and monotonicity") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  // 10! = 3628800 by direct product
  long long f = 1;
  for (int i = 2; i <= 10; ++i) f *= i;
  CHECK(f == 3628800);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-12));
  CHECK(log_factorial(10) == doctest::Approx(15.104412573075516).epsilon(1e-12));
  double prev = 0.0;
  for (int n = 0; n <= 5000; n += 7) {
    const double cur = log_factorial(n);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(log_factorial(-1), std::domain_error);
}

TEST_CASE("assoc_laguerre recurrence against the series oracle") {
  CHECK(assoc_laguerre(0, 3, 2.5) == 1.0);
  CHECK(assoc_laguerre(1, 0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(assoc_laguerre(2, 0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
  for (int n : {0, 1, 2, 3, 5, 9, 14}) {
    for (int a : {0, 1, 4, 11}) {
      for (double x : {0.0, 0.3, 1.7, 9.0, 30.0}) {
        CAPTURE(n); CAPTURE(a); CAPTURE(x);
        double max_term = 0.0;
        const double expected = laguerre_series(n, a, x, &max_term);
        // the series oracle cancels; its own rounding bounds the tolerance
        const double tol = 1e-12 * std::max({1.0, std::abs(expected), max_term});
        CHECK(std::abs(assoc_laguerre(n, a, x) - expected) < tol);
      }
    }
  }
  // Negative superscript down to -n stays defined: L_2^-1(x) = -x(2-x)/2.
  CHECK(assoc_laguerre(2, -1, 0.7) == doctest::Approx(-0.7 * (2.0 - 0.7) / 2.0));
  CHECK_THROWS_AS(assoc_laguerre(2, -3, 1.0), std::domain_error);
}

TEST_CASE("displacement_element closed form") {
  CHECK(displacement_element(0, 0, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  for (int n : {0, 1, 4}) {
    for (int m : {0, 2, 5}) {
      CHECK(displacement_element(n, m, 0.0) == (n == m ? 1.0 : 0.0));
    }
  }
  // Frozen from the dense matrix-exponential oracle (see test_oracle).
  CHECK(displacement_element(2, 1, 0.5) ==
        doctest::Approx(0.5460171011694801).epsilon(1e-12));
}

TEST_CASE("displacement parity and unitarity") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> alpha_dist(0.05, 8.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = alpha_dist(rng);
    const int m = trial % 5;
    for (int n = 0; n <= 12; ++n) {
      const double plus = displacement_element(n, m, alpha);
      const double minus = displacement_element(n, m, -alpha);
      const double sign = (n - m) % 2 == 0 ? 1.0 : -1.0;
      CHECK(minus == doctest::Approx(sign * plus).epsilon(1e-13));
    }
    const int cutoff = default_field_cutoff({alpha, 0.0, m}, 1);
    double colnorm = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
      const double d = displacement_element(n, m, alpha);
      colnorm += d * d;
    }
    CHECK(colnorm == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("sdn normalization matches the closed form") {
  // lambda^-2 = 2 + 2 e^-2 at alpha=1, eps=1, m=0
  const double lambda = sdn_normalization({1.0, 1.0, 0});
  CHECK(1.0 / (lambda * lambda) == doctest::Approx(2.0 + 2.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(1.0 / (lambda * lambda) == doctest::Approx(2.2706705664732256).epsilon(1e-14));
  // eps = -1 with alpha = 0 annihilates the state
  CHECK_THROWS_AS(sdn_normalization({0.0, -1.0, 0}), std::domain_error);

  // Dividing lambda out and renormalizing numerically reproduces it.
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> alpha_dist(0.3, 8.0);
  for (int trial = 0; trial < 15; ++trial) {
    const double alpha = alpha_dist(rng);
    const int m = trial % 5;
    const double eps = static_cast<double>(trial % 3) - 1.0;
    if (eps == -1.0 && alpha < 0.5) continue;
    const SdnParams params{alpha, eps, m};
    const int cutoff = default_field_cutoff(params, 1);
    double raw_norm = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
      const double u = displacement_element(n, m, alpha) +
                       eps * displacement_element(n, m, -alpha);
      raw_norm += u * u;
    }
    const double lam = sdn_normalization(params);
    CAPTURE(alpha); CAPTURE(eps); CAPTURE(m);
    CHECK(1.0 / std::sqrt(raw_norm) == doctest::Approx(lam).epsilon(1e-10));
  }
}

TEST_CASE("build_sdn_state special cases") {
  SUBCASE("even cat at alpha=1: odd coefficients vanish exactly") {
    const FieldState state = build_sdn_state({1.0, 1.0, 0}, 30);
    CHECK(state.coeffs[0] == doctest::Approx(0.805018182194592).epsilon(1e-13));
    for (int n = 1; n <= 30; n += 2) CHECK(std::abs(state.coeffs[n]) < 1e-12);
  }
  SUBCASE("eps=0, m=0 reduces to the coherent state") {
    const double alpha = 2.7;
    const FieldState state = build_sdn_state({alpha, 0.0, 0}, 60);
    for (int n = 0; n <= 60; ++n) {
      const double expected =
          std::exp(-0.5 * alpha * alpha + n * std::log(alpha) - 0.5 * log_factorial(n));
      CHECK(state.coeffs[n] == doctest::Approx(expected).epsilon(1e-10));
    }
  }
  SUBCASE("alpha=0, eps=0 leaves the number state") {
    const FieldState state = build_sdn_state({0.0, 0.0, 3}, 12);
    for (int n = 0; n <= 12; ++n) CHECK(state.coeffs[n] == (n == 3 ? 1.0 : 0.0));
  }
  SUBCASE("cutoff too small is rejected") {
    CHECK_THROWS_AS(build_sdn_state({7.0, 0.0, 0}, 40), CutoffError);
  }
}

TEST_CASE("normalization across the preset ranges") {
  for (double alpha : {0.5, 2.0, 5.0, 8.0}) {
    for (int m : {0, 1, 4}) {
      for (double eps : {-1.0, 0.0, 1.0}) {
        const SdnParams params{alpha, eps, m};
        const FieldState state = build_sdn_state(params, default_field_cutoff(params, 2));
        double norm = 0.0;
        for (double c : state.coeffs) norm += c * c;
        CAPTURE(alpha); CAPTURE(m); CAPTURE(eps);
        CHECK(std::abs(norm - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("parity of cat-state coefficients") {
  for (double alpha : {1.0, 3.5, 6.0}) {
    for (int m : {0, 2, 4}) {
      const FieldState even = build_sdn_state({alpha, 1.0, m},
                                              default_field_cutoff({alpha, 1.0, m}, 1));
      const FieldState odd = build_sdn_state({alpha, -1.0, m},
                                             default_field_cutoff({alpha, -1.0, m}, 1));
      for (int n = 0; n <= even.cutoff; ++n) {
        if ((n - m) % 2 != 0) CHECK(std::abs(even.coeffs[n]) < 1e-12);
      }
      for (int n = 0; n <= odd.cutoff; ++n) {
        if ((n - m) % 2 == 0) CHECK(std::abs(odd.coeffs[n]) < 1e-12);
      }
    }
  }
}

TEST_CASE("photon distribution") {
  SUBCASE("coherent case is Poissonian") {
    const double alpha = 3.0;
    const FieldState state = build_sdn_state({alpha, 0.0, 0}, 60);
    const auto p = photon_distribution(state);
    for (int n = 0; n <= 60; ++n) {
      const double expected =
          std::exp(-alpha * alpha + 2.0 * n * std::log(alpha) - log_factorial(n));
      CHECK(p[n] == doctest::Approx(expected).epsilon(1e-9));
    }
  }
  SUBCASE("displaced |1> at alpha=7 has exactly two local maxima") {
    const FieldState state = build_sdn_state({7.0, 0.0, 1}, 133);
    const auto p = photon_distribution(state);
    const double floor = 1e-12 * *std::max_element(p.begin(), p.end());
    int maxima = 0;
    for (std::size_t n = 1; n + 1 < p.size(); ++n) {
      if (p[n] > floor && p[n] > p[n - 1] && p[n] > p[n + 1]) ++maxima;
    }
    CHECK(maxima == 2);
  }
}

TEST_CASE("mean photon number") {
  CHECK(mean_photon(build_sdn_state({7.0, 0.0, 0}, 131)) ==
        doctest::Approx(49.0).epsilon(1e-10));
  CHECK(mean_photon(build_sdn_state({0.0, 0.0, 5}, 10)) == 5.0);
  // Even cat: nbar = alpha^2 tanh(alpha^2), an independent closed form.
  CHECK(mean_photon(build_sdn_state({2.0, 1.0, 0}, 40)) ==
        doctest::Approx(4.0 * std::tanh(4.0)).epsilon(1e-12));
}
