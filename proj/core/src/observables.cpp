#include "tjcm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tjcm/parallel.hpp"

namespace tjcm {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> axis(const GridSpec& grid) {
  if (grid.points < 2) throw std::domain_error("GridSpec: need at least 2 points");
  if (!(grid.radius > 0.0)) throw std::domain_error("GridSpec: radius must be > 0");
  std::vector<double> xs(grid.points);
  const double step = 2.0 * grid.radius / (grid.points - 1);
  for (int i = 0; i < grid.points; ++i) xs[i] = -grid.radius + step * i;
  return xs;
}

// W(z) for a field operator given by the coefficient lookup rho(a, b),
// a, b = 0..dim-1. Hermitian symmetry is used: only a >= b is summed and the
// off-diagonal strip is doubled via its real part. The innermost weight runs
// the normalized recurrence
//   kap_{b+1} = (2b+d+1-u)/sqrt((b+1)(b+1+d)) kap_b
//               - sqrt(b(b+d)/((b+1)(b+1+d))) kap_{b-1},
// kap_b = sqrt(b!/(b+d)!) L_b^d(u), which keeps every intermediate finite for
// the grids used here.
template <typename RhoFn>
double wigner_point(const RhoFn& rho, int dim, double x, double y,
                    double* imag_residue) {
  const Complex z(x, y);
  const double zsq = x * x + y * y;
  const double u = 2.0 * zsq;
  const double envelope = std::exp(-zsq);
  const Complex step = std::sqrt(2.0) * z;

  double w = 0.0;
  Complex power(1.0, 0.0);
  for (int d = 0; d < dim; ++d) {
    Complex s(0.0, 0.0);
    double kap_prev = 0.0;
    double kap = std::exp(-0.5 * log_factorial(d));
    double sign = 1.0;
    for (int b = 0; b + d < dim; ++b) {
      const Complex r = rho(b + d, b);
      if (r != Complex(0.0, 0.0)) s += (sign * kap) * r;
      const double denom = std::sqrt((b + 1.0) * (b + 1.0 + d));
      const double next =
          ((2.0 * b + d + 1.0 - u) * kap - std::sqrt(b * (b + d + 0.0)) * kap_prev) / denom;
      kap_prev = kap;
      kap = next;
      sign = -sign;
    }
    const Complex contrib = envelope * power * s;
    if (d == 0) {
      w += contrib.real();
      if (imag_residue) *imag_residue = std::max(*imag_residue, std::abs(contrib.imag()));
    } else {
      w += 2.0 * contrib.real();
    }
    power *= step;
  }
  return w / kPi;
}

template <typename RhoFn>
WignerGrid wigner_transform(const RhoFn& rho, int dim, const GridSpec& grid, double T) {
  WignerGrid out;
  out.T = T;
  out.x_axis = axis(grid);
  out.y_axis = out.x_axis;
  out.values.resize(grid.points, grid.points);
  std::vector<double> residue(grid.points, 0.0);
  parallel_for(0, static_cast<std::size_t>(grid.points), [&](std::size_t ix) {
    for (int iy = 0; iy < grid.points; ++iy) {
      out.values(ix, iy) =
          wigner_point(rho, dim, out.x_axis[ix], out.y_axis[iy], &residue[ix]);
    }
  });
  out.max_imag_residue = *std::max_element(residue.begin(), residue.end());
  const int last = grid.points - 1;
  double edge = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    edge = std::max({edge, std::abs(out.values(0, i)), std::abs(out.values(last, i)),
                     std::abs(out.values(i, 0)), std::abs(out.values(i, last))});
  }
  out.boundary_warning = edge > 1e-6;
  return out;
}

}  // namespace

double atomic_inversion(const JointState& state) {
  double inv = 0.0;
  for (int n = 0; n < state.block_count(); ++n) {
    inv += std::norm(state.branch[0][n]) - std::norm(state.branch[3][n]);
  }
  return inv;
}

double atomic_inversion_asymptotic(const FieldState& field, double T) {
  double inv = 0.0;
  for (int n = 0; n <= field.cutoff; ++n) {
    inv += field.coeffs[n] * field.coeffs[n] * std::cos(2.0 * T * std::sqrt(n + 1.5));
  }
  return inv;
}

double revival_time(const FieldState& field) {
  return 2.0 * kPi * std::sqrt(mean_photon(field) + 1.5);
}

TimeSeries inversion_series(const BlockEvolver& evolver, const std::vector<double>& times) {
  TimeSeries series;
  series.times = times;
  series.values.assign(times.size(), 0.0);
  parallel_for(0, times.size(), [&](std::size_t i) {
    series.values[i] = atomic_inversion(evolver.evolve(times[i]));
  });
  return series;
}

TimeSeries inversion_series_asymptotic(const FieldState& field,
                                       const std::vector<double>& times) {
  TimeSeries series;
  series.times = times;
  series.values.assign(times.size(), 0.0);
  parallel_for(0, times.size(), [&](std::size_t i) {
    series.values[i] = atomic_inversion_asymptotic(field, times[i]);
  });
  return series;
}

double WignerGrid::integral() const {
  const double hx = x_axis.size() > 1 ? x_axis[1] - x_axis[0] : 0.0;
  const double hy = y_axis.size() > 1 ? y_axis[1] - y_axis[0] : 0.0;
  return values.sum() * hx * hy;
}

WignerGrid wigner(const JointState& state, const GridSpec& grid) {
  const int dim = state.field_dim() + 1;
  const int blocks = state.block_count();
  // Branch vectors padded to the field dimension with their k-ladder shifts.
  std::array<std::vector<Complex>, 4> padded;
  for (int j = 0; j < 4; ++j) {
    padded[j].assign(dim, Complex(0.0, 0.0));
    const int s = state.branch_shift(j);
    for (int n = 0; n < blocks; ++n) padded[j][n + s] = state.branch[j][n];
  }
  const auto rho = [&padded](int a, int b) {
    return padded[0][a] * std::conj(padded[0][b]) +
           padded[1][a] * std::conj(padded[1][b]) +
           padded[2][a] * std::conj(padded[2][b]) +
           padded[3][a] * std::conj(padded[3][b]);
  };
  return wigner_transform(rho, dim, grid, state.T);
}

WignerGrid wigner_of_density(const Eigen::MatrixXcd& rho_matrix, const GridSpec& grid,
                             double T) {
  const auto rho = [&rho_matrix](int a, int b) { return rho_matrix(a, b); };
  return wigner_transform(rho, static_cast<int>(rho_matrix.rows()), grid, T);
}

WignerGrid wigner_asymptotic(double alpha, double T, const GridSpec& grid) {
  if (!(alpha > 0.0)) throw std::domain_error("wigner_asymptotic: alpha must be > 0");
  const double nbar = alpha * alpha;
  const double eta = T / std::sqrt(nbar);
  const double eta_prime = T * std::sqrt(nbar) + T / (2.0 * std::sqrt(nbar));
  const double s2a = std::sqrt(2.0) * alpha;
  const double ce = std::cos(eta), se = std::sin(eta);
  const double half_sq = std::cos(eta / 2.0) * std::cos(eta / 2.0);

  WignerGrid out;
  out.T = T;
  out.x_axis = axis(grid);
  out.y_axis = out.x_axis;
  out.values.resize(grid.points, grid.points);
  parallel_for(0, static_cast<std::size_t>(grid.points), [&](std::size_t ix) {
    const double x = out.x_axis[ix];
    for (int iy = 0; iy < grid.points; ++iy) {
      const double y = out.y_axis[iy];
      const double g_static = 2.0 * std::exp(-y * y - (x - s2a) * (x - s2a));
      const double dx = x - s2a * ce;
      const double g_up = std::exp(-dx * dx - (y - s2a * se) * (y - s2a * se));
      const double g_dn = std::exp(-dx * dx - (y + s2a * se) * (y + s2a * se));
      const double fringe_mid =
          std::exp(-dx * dx - y * y) *
          std::cos(2.0 * eta_prime + 2.0 * std::sqrt(2.0) * x * alpha * se -
                   nbar * std::sin(2.0 * eta)) *
          se;
      const double mu_common = eta_prime - nbar * se + std::sqrt(2.0) * alpha * x * se;
      const double mu_p = mu_common + std::sqrt(2.0) * alpha * (y * ce + y);
      const double mu_m = mu_common - std::sqrt(2.0) * alpha * (y * ce + y);
      const double xc = x - s2a * half_sq;
      const double yoff = alpha / std::sqrt(2.0) * se;
      const double fringe_side =
          std::exp(-xc * xc) * (std::exp(-(y + yoff) * (y + yoff)) * std::sin(mu_p) +
                                std::exp(-(y - yoff) * (y - yoff)) * std::sin(mu_m));
      out.values(ix, iy) =
          (g_static + g_up + g_dn - 2.0 * (fringe_mid + fringe_side) * se) / (4.0 * kPi);
    }
  });
  const int last = grid.points - 1;
  double edge = 0.0;
  for (int i = 0; i < grid.points; ++i) {
    edge = std::max({edge, std::abs(out.values(0, i)), std::abs(out.values(last, i)),
                     std::abs(out.values(i, 0)), std::abs(out.values(i, last))});
  }
  out.boundary_warning = edge > 1e-6;
  return out;
}

double PhaseDistribution::integral() const {
  if (thetas.size() < 2) return 0.0;
  const double h = thetas[1] - thetas[0];
  double sum = 0.0;
  for (double v : values) sum += v;
  sum -= 0.5 * (values.front() + values.back());
  return sum * h;
}

PhaseDistribution phase_distribution(const JointState& state, int n_thetas) {
  if (n_thetas < 64) throw std::domain_error("phase_distribution: need n_thetas >= 64");
  PhaseDistribution dist;
  dist.thetas.resize(n_thetas);
  dist.values.assign(n_thetas, 0.0);
  const double h = 2.0 * kPi / (n_thetas - 1);
  for (int i = 0; i < n_thetas; ++i) dist.thetas[i] = -kPi + h * i;

  const int blocks = state.block_count();
  parallel_for(0, static_cast<std::size_t>(n_thetas), [&](std::size_t i) {
    const double theta = dist.thetas[i];
    const Complex rot = std::exp(Complex(0.0, theta));
    double p = 0.0;
    for (int j = 0; j < 4; ++j) {
      Complex f(0.0, 0.0);
      Complex phase(1.0, 0.0);
      for (int n = 0; n < blocks; ++n) {
        f += state.branch[j][n] * phase;
        phase *= rot;
      }
      p += std::norm(f);
    }
    dist.values[i] = p / (2.0 * kPi);
  });
  return dist;
}

std::vector<Peak> find_peaks(const WignerGrid& grid, double threshold,
                             double min_separation) {
  std::vector<Peak> candidates;
  const int nx = static_cast<int>(grid.x_axis.size());
  const int ny = static_cast<int>(grid.y_axis.size());
  for (int i = 1; i + 1 < nx; ++i) {
    for (int j = 1; j + 1 < ny; ++j) {
      const double w = grid.values(i, j);
      if (w <= threshold) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (grid.values(i + di, j + dj) >= w) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) candidates.push_back({grid.x_axis[i], grid.y_axis[j], w});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  std::vector<Peak> kept;
  const double sep2 = min_separation * min_separation;
  for (const Peak& p : candidates) {
    bool ok = true;
    for (const Peak& q : kept) {
      const double dx = p.x - q.x, dy = p.y - q.y;
      if (dx * dx + dy * dy < sep2) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(p);
  }
  return kept;
}

double default_grid_radius(double alpha) { return std::sqrt(2.0) * alpha + 5.0; }

}  // namespace tjcm
