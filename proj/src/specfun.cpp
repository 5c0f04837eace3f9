#include "hulthen/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hulthen::specfun {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

double lgamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw std::domain_error("lgamma_fn: pole at nonpositive integer");
  return std::lgamma(x);
}

void JacobiParams::validate() const {
  if (n < 0) throw std::invalid_argument("JacobiParams: degree must be >= 0");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("JacobiParams: exponents must be > -1");
}

double jacobi_poly(const JacobiParams& p, double x) {
  p.validate();
  const double a = p.a, b = p.b;
  if (p.n == 0) return 1.0;
  double pm1 = 1.0;
  double pk = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int k = 2; k <= p.n; ++k) {
    // Abramowitz & Stegun 22.7.1
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b);
    const double c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double next = ((c2 + c3 * x) * pk - c4 * pm1) / c1;
    pm1 = pk;
    pk = next;
  }
  return pk;
}

double hyp2f1_terminating(int n, double b, double c, double x) {
  if (n < 0) throw std::invalid_argument("hyp2f1_terminating: n must be >= 0");
  if (is_nonpositive_integer(c)) throw std::domain_error("hyp2f1_terminating: c at nonpositive integer");
  // alternating terms can cancel heavily; accumulate in extended precision
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<long double>(k) - n) * (b + k) / ((c + k) * (k + 1.0L)) * x;
    sum += term;
  }
  return static_cast<double>(sum);
}

namespace {

GaussLegendreRule make_rule(int n) {
  // Newton iteration on P_n, nodes seeded by the Chebyshev-like estimate.
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 2) throw std::invalid_argument("gauss_legendre: need at least 2 nodes");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

QuadratureResult quadrature(const std::function<double(double)>& f, double lo, double hi,
                            int nodes) {
  if (!(lo < hi)) throw std::invalid_argument("quadrature: need lo < hi");
  if (nodes < 2) throw std::invalid_argument("quadrature: need nodes >= 2");

  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  auto estimate = [&](int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
  };

  QuadratureResult res;
  res.nodes = nodes;
  res.value = estimate(nodes);
  for (int n = 2 * nodes; n <= quadrature_max_nodes; n *= 2) {
    const double next = estimate(n);
    const double scale = std::max(std::abs(next), 1e-300);
    res.rel_err = std::abs(next - res.value) / scale;
    res.value = next;
    res.nodes = n;
    if (res.rel_err < 1e-10) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace hulthen::specfun
