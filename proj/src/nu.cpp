#include "hulthen/nu.hpp"

#include <cmath>
#include <stdexcept>

#include "hulthen/specfun.hpp"

namespace hulthen::nu {

const char* pi_branch_name(PiBranch b) {
  switch (b) {
    case PiBranch::plus_kplus: return "plus_kplus";
    case PiBranch::minus_kplus: return "minus_kplus";
    case PiBranch::plus_kminus: return "plus_kminus";
    case PiBranch::minus_kminus: return "minus_kminus";
  }
  return "?";
}

double NuParameters::root_cab() const { return std::sqrt(c + a - b); }

double NuParameters::big_k() const { return 0.5 + root_cab(); }

std::array<PiCandidate, 4> pi_candidates(double a, double b, double c) {
  if (c < 0.0) throw std::domain_error("pi_candidates: c < 0, sqrt(c) not real");
  if (c + a - b < 0.0) throw std::domain_error("pi_candidates: c + a - b < 0, no real branch");
  const double sc = std::sqrt(c);
  const double root = std::sqrt(c + a - b);
  // k_{1,2} = (b - 2c) +- 2 sqrt(c^2 + c(a-b)); the radicand factors as c (c+a-b).
  const double disc = 2.0 * std::sqrt(c * (c + a - b));
  const double k_plus = (b - 2.0 * c) + disc;
  const double k_minus = (b - 2.0 * c) - disc;
  // Under the zero-discriminant k, the square root in pi(s) collapses to
  // |inner(s)| with inner = (sc -+ root)s - sc; the outer sign doubles each k.
  return {{
      {PiBranch::minus_kminus, k_minus, -0.5 - (sc + root), sc},
      {PiBranch::minus_kplus, k_plus, -0.5 - (sc - root), sc},
      {PiBranch::plus_kminus, k_minus, -0.5 + (sc + root), -sc},
      {PiBranch::plus_kplus, k_plus, -0.5 + (sc - root), -sc},
  }};
}

PiCandidate select_branch(std::span<const PiCandidate> candidates) {
  for (const PiCandidate& cand : candidates) {
    if (cand.tau_slope() < 0.0) return cand;
  }
  throw std::runtime_error("select_branch: no candidate gives tau with negative slope");
}

NuParameters nu_parameters(const PotentialSpec& spec, const QuantumNumbers& q,
                           double epsilon_sq) {
  spec.validate();
  q.validate();
  if (epsilon_sq < 0.0) throw std::domain_error("nu_parameters: epsilon_sq must be >= 0");
  const double lam = q.lambda();
  const double alpha_sq = spec.alpha_sq();
  NuParameters p;
  p.a = 0.25 + epsilon_sq + lam * spec.c0 + alpha_sq;
  p.b = 2.0 * epsilon_sq + 2.0 * lam * spec.c0 + alpha_sq - lam;
  p.c = epsilon_sq + lam * spec.c0;
  const auto candidates = pi_candidates(p.a, p.b, p.c);
  p.selected = select_branch(candidates);
  return p;
}

double epsilon_sq_closed_form(const QuantumNumbers& q, double alpha_sq, double c0) {
  q.validate();
  const double n_big = q.principal();
  const double t = 0.5 * n_big - alpha_sq / (2.0 * n_big);
  return t * t - q.lambda() * c0;
}

double quantization_residual(const PotentialSpec& spec, const QuantumNumbers& q,
                             double epsilon_sq) {
  if (epsilon_sq < 0.0) throw std::domain_error("quantization_residual: epsilon_sq must be >= 0");
  const double lam = q.lambda();
  const double alpha_sq = spec.alpha_sq();
  const double a = 0.25 + epsilon_sq + lam * spec.c0 + alpha_sq;
  const double b = 2.0 * epsilon_sq + 2.0 * lam * spec.c0 + alpha_sq - lam;
  const double c = epsilon_sq + lam * spec.c0;
  if (c < 0.0 || c + a - b < 0.0)
    throw std::domain_error("quantization_residual: negative radicand");
  const double sc = std::sqrt(c);
  const double root = std::sqrt(c + a - b);
  const double lhs = b - 2.0 * c - 2.0 * std::sqrt(c * (c + a - b)) - (0.5 + sc + root);
  const double n = q.n_r;
  const double rhs = 2.0 * n * (1.0 + sc + root) + n * (n - 1.0);
  return lhs - rhs;
}

EnergyResult energy_nu(const PotentialSpec& spec, const QuantumNumbers& q) {
  spec.validate();
  q.validate();
  const double alpha_sq = spec.alpha_sq();
  const double eps_sq = epsilon_sq_closed_form(q, alpha_sq, spec.c0);
  EnergyResult res;
  res.method = Method::nu;
  res.energy = energy_from_epsilon_sq(spec, eps_sq);
  res.bound = res.energy < 0.0;
  res.dimensionless = {alpha_sq, eps_sq};
  const double n_big = q.principal();
  res.sqrt_c = alpha_sq / (2.0 * n_big) - 0.5 * n_big;
  res.big_k = q.l + 1.0;
  if (eps_sq >= 0.0 && res.sqrt_c >= 0.0) {
    // The closed form must sit back on the quantization condition it was
    // solved from. Outside alpha >= N the closed form continues a root of the
    // squared equation and the condition itself no longer applies.
    const double resid = quantization_residual(spec, q, eps_sq);
    if (std::abs(resid) > 1e-9)
      throw std::logic_error("energy_nu: closed-form level violates the quantization condition");
  }
  return res;
}

double normalization_constant(const PotentialSpec& spec, const QuantumNumbers& q) {
  const EnergyResult level = energy_nu(spec, q);
  if (!level.bound || !(level.sqrt_c > 0.0))
    throw std::domain_error("normalization_constant: no normalizable eigenfunction");
  const double sc = level.sqrt_c;
  const double k_exp = level.big_k;
  const double n = q.n_r;
  const double measure = 1.0 / spec.delta;  // dr = -ds/(delta s)
  using specfun::lgamma_fn;
  double log_c_sq = lgamma_fn(n + 1.0) + std::log(2.0 * sc) + std::log(n + k_exp + sc) +
                    lgamma_fn(2.0 * (k_exp + sc) + n) - std::log(measure) -
                    std::log(n + k_exp) - lgamma_fn(n + 2.0 * sc + 1.0) -
                    lgamma_fn(n + 2.0 * k_exp);
  return std::exp(0.5 * log_c_sq);
}

RadialWavefunction::RadialWavefunction(const PotentialSpec& spec, const QuantumNumbers& q)
    : spec_(spec), q_(q) {
  const EnergyResult level = energy_nu(spec, q);
  if (!level.bound || !(level.sqrt_c > 0.0))
    throw std::domain_error("RadialWavefunction: no normalizable eigenfunction");
  sqrt_c_ = level.sqrt_c;
  big_k_ = level.big_k;
  energy_ = level.energy;
  norm_ = normalization_constant(spec, q);
}

double RadialWavefunction::chi_s(double s) const {
  if (s < 0.0 || s > 1.0) throw std::domain_error("chi_s: s must lie in [0, 1]");
  if (s == 0.0 || s == 1.0) return 0.0;
  const specfun::JacobiParams jp{q_.n_r, 2.0 * sqrt_c_, 2.0 * big_k_ - 1.0};
  return norm_ * std::pow(s, sqrt_c_) * std::pow(1.0 - s, big_k_) *
         specfun::jacobi_poly(jp, 1.0 - 2.0 * s);
}

double RadialWavefunction::chi_r(double r) const {
  if (r < 0.0) throw std::domain_error("chi_r: r must be >= 0");
  if (r == 0.0) return 0.0;
  const double one_minus_s = -std::expm1(-spec_.delta * r);
  const specfun::JacobiParams jp{q_.n_r, 2.0 * sqrt_c_, 2.0 * big_k_ - 1.0};
  // s^{sqrt c} evaluated as exp(-delta sqrt_c r); 1 - 2s = 2(1-s) - 1.
  return norm_ * std::exp(-spec_.delta * sqrt_c_ * r) * std::pow(one_minus_s, big_k_) *
         specfun::jacobi_poly(jp, 2.0 * one_minus_s - 1.0);
}

double RadialWavefunction::full_radial(double r) const {
  if (!(r > 0.0)) throw std::domain_error("full_radial: r must be > 0");
  return chi_r(r) / r;
}

RadialWavefunction wavefunction(const PotentialSpec& spec, const QuantumNumbers& q) {
  return RadialWavefunction(spec, q);
}

}  // namespace hulthen::nu
