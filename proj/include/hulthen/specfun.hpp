#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hulthen::specfun {

/// Gamma function on the real line. Poles at 0, -1, -2, ... raise
/// std::domain_error; accuracy is that of the C library tgamma
/// (better than 12 significant digits on (0, 170)).
double gamma_fn(double x);

/// log|Gamma(x)| for x > 0.
double lgamma_fn(double x);

/// Parameters of a Jacobi polynomial P_n^{(a,b)}; requires n >= 0, a > -1, b > -1.
struct JacobiParams {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  void validate() const;
};

/// P_n^{(a,b)}(x) by the three-term recurrence in the degree, stable for
/// the non-integer exponents that appear in the bound-state eigenfunctions.
double jacobi_poly(const JacobiParams& p, double x);

/// Terminating Gauss hypergeometric series 2F1(-n, b; c; x), summed exactly
/// over its n+1 terms. c at a nonpositive integer raises std::domain_error.
double hyp2f1_terminating(int n, double b, double c, double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order, computed by Newton iteration on the Legendre
/// polynomial and cached. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  double rel_err = 0.0;  ///< |last - previous| / |last|, the achieved tolerance
  int nodes = 0;
  bool converged = false;
};

inline constexpr int quadrature_max_nodes = 1 << 14;

/// Gauss-Legendre estimate of the integral of f over [lo, hi], doubling the
/// node count from `nodes` until successive estimates agree to 1e-10 relative
/// or the cap of 2^14 nodes is reached. Non-convergence is reported through
/// the result, not an error.
QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            int nodes = 16);

}  // namespace hulthen::specfun
