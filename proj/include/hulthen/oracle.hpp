#pragma once

#include <span>
#include <vector>

#include "hulthen/model.hpp"
#include "hulthen/nu.hpp"

namespace hulthen::oracle {

/// Uniform radial grid with Dirichlet ends.
struct GridSpec {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_points = 0;

  static GridSpec defaults(double delta) { return {1e-6 / delta, 50.0 / delta, 8000}; }
  void validate() const;
};

/// Negative part of the discrete spectrum, Richardson-extrapolated over
/// successive grid halvings.
struct SpectrumResult {
  std::vector<double> eigenvalues;        ///< ascending, E < 0
  std::vector<int> node_counts;          ///< sign changes of the eigenvectors
  std::vector<double> error_estimates;   ///< change of the extrapolated value at the last halving
  std::vector<bool> truncation_sensitive;  ///< |E| < 1e-5: box truncation may dominate
  GridSpec grid;  ///< finest grid used
  CentrifugalMode mode = CentrifugalMode::approximated;
  double tolerance = 0.0;
  bool converged = false;
};

/// Discretizes -(hbar^2/2mu) chi'' + V_eff chi = E chi by second-order central
/// differences and returns every E < 0. The grid is refined (n -> 2n+1, exact
/// step halving) until consecutive Richardson-extrapolated eigenvalues agree to
/// `tol`, at most `max_refinements` extra levels; non-convergence is reported
/// through the flags, not an error.
SpectrumResult solve_radial(const PotentialSpec& spec, int l, CentrifugalMode mode,
                            GridSpec grid, double tol = 1e-7, int max_refinements = 3);

/// Relative L2 defect of the radial equation (approximated potential) for an
/// analytic eigenpair, with chi'' taken by eighth-order central differences on
/// the given grid. Normalized by the L2 norm of the kinetic term.
double ode_residual(const nu::RadialWavefunction& chi, double energy, const GridSpec& grid);

/// E_exact - E_approx for the eigenvalue of matched node count n_r.
/// Throws std::runtime_error naming the mode whose spectrum lacks the state.
double approximation_gap(const PotentialSpec& spec, const QuantumNumbers& q,
                         const GridSpec& grid, double tol = 1e-7);

namespace detail {

/// Number of eigenvalues of the symmetric tridiagonal (diag, constant
/// off-diagonal) strictly below x, by the Sturm / LDL^T pivot count.
int sturm_count_below(std::span<const double> diag, double off, double x);

/// All eigenvalues below `upper`, each bisected to machine resolution.
std::vector<double> eigenvalues_below(std::span<const double> diag, double off, double upper);

/// Eigenvector by shifted inverse iteration (tridiagonal LU with partial
/// pivoting), normalized to unit Euclidean length.
std::vector<double> eigenvector(std::span<const double> diag, double off, double lambda);

/// Sign changes of v, ignoring entries below 1e-9 of the peak.
int count_sign_changes(std::span<const double> v);

}  // namespace detail

}  // namespace hulthen::oracle
