#include "hulthen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hulthen::oracle {

void GridSpec::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max))
    throw std::invalid_argument("GridSpec: need 0 < r_min < r_max");
  if (n_points < 500) throw std::invalid_argument("GridSpec: need n_points >= 500");
}

namespace detail {

int sturm_count_below(std::span<const double> diag, double off, double x) {
  const double e2 = off * off;
  const double pivmin =
      std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon() *
      std::max(1.0, e2);
  int count = 0;
  double q = 1.0;
  for (size_t i = 0; i < diag.size(); ++i) {
    q = diag[i] - x - (i ? e2 / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> eigenvalues_below(std::span<const double> diag, double off, double upper) {
  const int m = sturm_count_below(diag, off, upper);
  std::vector<double> evs(m);
  if (m == 0) return evs;
  double gersh = diag[0];
  for (double d : diag) gersh = std::min(gersh, d);
  gersh -= 2.0 * std::abs(off) + 1.0;
  for (int j = 0; j < m; ++j) {
    double lo = gersh, hi = upper;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (sturm_count_below(diag, off, mid) > j)
        hi = mid;
      else
        lo = mid;
    }
    evs[j] = 0.5 * (lo + hi);
  }
  return evs;
}

namespace {

// Solve (T - lambda I) w = rhs in place, T tridiagonal with constant
// off-diagonal; LU with partial pivoting, zero pivots nudged to tiny.
void shifted_solve(std::span<const double> diag, double off, double lambda,
                   std::vector<double>& rhs) {
  const size_t n = diag.size();
  std::vector<double> d(n), du(n > 1 ? n - 1 : 0), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<double> dl(n > 1 ? n - 1 : 0, off);
  for (size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  for (size_t i = 0; i + 1 < n; ++i) du[i] = off;

  double scale = std::abs(off);
  for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
  const double tiny = scale * std::numeric_limits<double>::epsilon() *
                      std::numeric_limits<double>::epsilon();

  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (std::abs(d[i]) < tiny) d[i] = tiny;
      const double mult = dl[i] / d[i];
      d[i + 1] -= mult * du[i];
      rhs[i + 1] -= mult * rhs[i];
      dl[i] = 0.0;
    } else {
      const double mult = d[i] / dl[i];
      d[i] = dl[i];
      const double tmp = d[i + 1];
      d[i + 1] = du[i] - mult * tmp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -mult * du[i + 1];
      }
      du[i] = tmp;
      std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= mult * rhs[i];
      dl[i] = 0.0;
    }
  }
  if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;
  rhs[n - 1] /= d[n - 1];
  if (n > 1) {
    if (std::abs(d[n - 2]) < tiny) d[n - 2] = tiny;
    rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
  }
  for (size_t k = n; k-- > 2;) {
    const size_t i = k - 2;
    if (std::abs(d[i]) < tiny) d[i] = tiny;
    rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - du2[i] * rhs[i + 2]) / d[i];
  }
}

}  // namespace

std::vector<double> eigenvector(std::span<const double> diag, double off, double lambda) {
  const size_t n = diag.size();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int iter = 0; iter < 3; ++iter) {
    shifted_solve(diag, off, lambda, v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

int count_sign_changes(std::span<const double> v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double threshold = 1e-9 * peak;
  int changes = 0, last = 0;
  for (double x : v) {
    if (std::abs(x) <= threshold) continue;
    const int sign = x > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace detail

namespace {

std::vector<double> grid_potential(const PotentialSpec& spec, int l, CentrifugalMode mode,
                                   double r_min, double h, int n) {
  const QuantumNumbers q{0, l};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = potential_effective(spec, q, r_min + (i + 1) * h, mode);
  return v;
}

struct Level {
  std::vector<double> raw;  // eigenvalues of the discrete operator
  int n = 0;
  double h = 0.0;
};

Level solve_level(const PotentialSpec& spec, int l, CentrifugalMode mode, const GridSpec& grid,
                  int n) {
  Level lv;
  lv.n = n;
  lv.h = (grid.r_max - grid.r_min) / (n + 1);
  const double kin = spec.hbar * spec.hbar / (2.0 * spec.mu * lv.h * lv.h);
  std::vector<double> diag = grid_potential(spec, l, mode, grid.r_min, lv.h, n);
  for (double& d : diag) d += 2.0 * kin;
  lv.raw = detail::eigenvalues_below(diag, -kin, 0.0);
  return lv;
}

}  // namespace

SpectrumResult solve_radial(const PotentialSpec& spec, int l, CentrifugalMode mode,
                            GridSpec grid, double tol, int max_refinements) {
  spec.validate();
  grid.validate();
  if (l < 0) throw std::invalid_argument("solve_radial: l must be >= 0");

  Level coarse = solve_level(spec, l, mode, grid, grid.n_points);
  Level fine = solve_level(spec, l, mode, grid, 2 * grid.n_points + 1);

  auto extrapolate = [](const Level& c, const Level& f) {
    const size_t m = std::min(c.raw.size(), f.raw.size());
    std::vector<double> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = (4.0 * f.raw[i] - c.raw[i]) / 3.0;
    return e;
  };

  std::vector<double> prev_extrap = extrapolate(coarse, fine);
  std::vector<double> extrap = prev_extrap;
  std::vector<double> err(prev_extrap.size(), std::numeric_limits<double>::infinity());
  bool converged = false;

  for (int level = 0; level < max_refinements && !converged; ++level) {
    coarse = std::move(fine);
    fine = solve_level(spec, l, mode, grid, 2 * coarse.n + 1);
    extrap = extrapolate(coarse, fine);
    const size_t m = std::min(prev_extrap.size(), extrap.size());
    err.assign(extrap.size(), std::numeric_limits<double>::infinity());
    converged = extrap.size() == prev_extrap.size();
    for (size_t i = 0; i < m; ++i) {
      err[i] = std::abs(extrap[i] - prev_extrap[i]);
      if (err[i] > tol) converged = false;
    }
    prev_extrap = extrap;
  }

  SpectrumResult res;
  res.grid = {grid.r_min, grid.r_max, fine.n};
  res.mode = mode;
  res.tolerance = tol;
  res.converged = converged;
  res.eigenvalues = extrap;
  res.error_estimates = err;
  res.node_counts.resize(extrap.size());
  res.truncation_sensitive.resize(extrap.size());

  const double kin = spec.hbar * spec.hbar / (2.0 * spec.mu * fine.h * fine.h);
  std::vector<double> diag = grid_potential(spec, l, mode, grid.r_min, fine.h, fine.n);
  for (double& d : diag) d += 2.0 * kin;
  for (size_t i = 0; i < extrap.size(); ++i) {
    const std::vector<double> v = detail::eigenvector(diag, -kin, fine.raw[i]);
    res.node_counts[i] = detail::count_sign_changes(v);
    res.truncation_sensitive[i] = std::abs(extrap[i]) < 1e-5;
  }
  return res;
}

double ode_residual(const nu::RadialWavefunction& chi, double energy, const GridSpec& grid) {
  grid.validate();
  const PotentialSpec& spec = chi.spec();
  const QuantumNumbers& q = chi.quantum_numbers();
  const int n = grid.n_points;
  const double h = (grid.r_max - grid.r_min) / (n - 1);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = chi.chi_r(grid.r_min + i * h);

  // eighth-order central second derivative
  constexpr double w0 = -205.0 / 72.0, w1 = 8.0 / 5.0, w2 = -1.0 / 5.0, w3 = 8.0 / 315.0,
                   w4 = -1.0 / 560.0;
  const double pref = spec.hbar * spec.hbar / (2.0 * spec.mu);
  double num = 0.0, den = 0.0;
  for (int i = 4; i < n - 4; ++i) {
    const double d2 =
        (w4 * (vals[i - 4] + vals[i + 4]) + w3 * (vals[i - 3] + vals[i + 3]) +
         w2 * (vals[i - 2] + vals[i + 2]) + w1 * (vals[i - 1] + vals[i + 1]) + w0 * vals[i]) /
        (h * h);
    const double kinetic = -pref * d2;
    const double v = potential_effective(spec, q, grid.r_min + i * h,
                                         CentrifugalMode::approximated);
    const double res = kinetic + (v - energy) * vals[i];
    num += res * res;
    den += kinetic * kinetic;
  }
  if (den == 0.0) throw std::runtime_error("ode_residual: vanishing kinetic norm");
  return std::sqrt(num / den);
}

double approximation_gap(const PotentialSpec& spec, const QuantumNumbers& q,
                         const GridSpec& grid, double tol) {
  const SpectrumResult exact = solve_radial(spec, q.l, CentrifugalMode::exact, grid, tol);
  const SpectrumResult approx = solve_radial(spec, q.l, CentrifugalMode::approximated, grid, tol);
  auto pick = [&](const SpectrumResult& s, const char* name) {
    for (size_t i = 0; i < s.eigenvalues.size(); ++i)
      if (s.node_counts[i] == q.n_r) return s.eigenvalues[i];
    throw std::runtime_error(std::string("approximation_gap: state with ") +
                             std::to_string(q.n_r) + " nodes absent from the " + name +
                             " spectrum");
  };
  return pick(exact, "exact-mode") - pick(approx, "approximated-mode");
}

}  // namespace hulthen::oracle
