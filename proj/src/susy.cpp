#include "hulthen/susy.hpp"

#include <cmath>
#include <stdexcept>

#include "hulthen/specfun.hpp"

namespace hulthen::susy {

SuperpotentialCoeffs superpotential_coeffs(const PotentialSpec& spec, int l) {
  return shifted_coeffs(spec, l, 0);
}

SuperpotentialCoeffs shifted_coeffs(const PotentialSpec& spec, int l, int steps) {
  spec.validate();
  if (l < 0) throw std::invalid_argument("superpotential_coeffs: l must be >= 0");
  if (steps < 0) throw std::invalid_argument("shifted_coeffs: steps must be >= 0");
  SuperpotentialCoeffs c;
  c.l = l;
  c.delta = spec.delta;
  c.w_scale = spec.hbar / std::sqrt(2.0 * spec.mu);
  c.B = spec.delta * (l + 1 + steps);
  c.A = 0.5 * c.B - spec.delta * spec.delta * spec.alpha_sq() / (2.0 * c.B);
  return c;
}

double superpotential(const SuperpotentialCoeffs& coeffs, double r) {
  if (!(r > 0.0)) throw std::domain_error("superpotential: r must be > 0");
  const double u = screened_ratio(coeffs.delta, r);
  return -coeffs.w_scale * (coeffs.A + coeffs.B * u);
}

double riccati_residual(const SuperpotentialCoeffs& coeffs, const PotentialSpec& spec,
                        const QuantumNumbers& q, double e0, double r) {
  if (!(r > 0.0)) throw std::domain_error("riccati_residual: r must be > 0");
  const double u = screened_ratio(coeffs.delta, r);
  const double w = -coeffs.w_scale * (coeffs.A + coeffs.B * u);
  // u' = -delta u (1+u)
  const double w_prime = coeffs.w_scale * coeffs.B * coeffs.delta * u * (1.0 + u);
  const double v_eff = potential_effective(spec, q, r, CentrifugalMode::approximated);
  return w * w - coeffs.w_scale * w_prime - (v_eff - e0);
}

EnergyResult ground_energy(const PotentialSpec& spec, int l) {
  const SuperpotentialCoeffs c = superpotential_coeffs(spec, l);
  const double pref = spec.hbar * spec.hbar / (2.0 * spec.mu);
  EnergyResult res;
  res.method = Method::susy;
  res.energy = pref * l * (l + 1.0) * spec.c0 * spec.delta * spec.delta - pref * c.A * c.A;
  res.bound = res.energy < 0.0;
  res.dimensionless = dimensionless(spec, res.energy);
  res.sqrt_c = -c.A / spec.delta;
  res.big_k = c.B / spec.delta;
  return res;
}

GroundWavefunction::GroundWavefunction(const PotentialSpec& spec, int l)
    : spec_(spec), coeffs_(superpotential_coeffs(spec, l)) {
  if (!(coeffs_.A < 0.0))
    throw std::domain_error("GroundWavefunction: A >= 0, state not normalizable");
  const double bd = coeffs_.B / coeffs_.delta;
  auto chi_sq = [&](double r) {
    const double chi = std::exp(coeffs_.A * r) * std::pow(-std::expm1(-coeffs_.delta * r), bd);
    return chi * chi;
  };
  // e^{2Ar} tail: 25/|A| puts the truncated mass below 1e-21.
  const double r_max = std::max(40.0 / spec.delta, 25.0 / -coeffs_.A);
  const auto quad = specfun::quadrature(chi_sq, 0.0, r_max, 64);
  if (!quad.converged)
    throw std::runtime_error("GroundWavefunction: normalization quadrature did not converge");
  n0_ = 1.0 / std::sqrt(quad.value);
}

double GroundWavefunction::operator()(double r) const {
  if (r < 0.0) throw std::domain_error("GroundWavefunction: r must be >= 0");
  if (r == 0.0) return 0.0;
  return n0_ * std::exp(coeffs_.A * r) *
         std::pow(-std::expm1(-coeffs_.delta * r), coeffs_.B / coeffs_.delta);
}

double PartnerPotentialPair::v_plus(double r) const {
  if (!(r > 0.0)) throw std::domain_error("v_plus: r must be > 0");
  const double u = screened_ratio(coeffs.delta, r);
  const double db = coeffs.delta * coeffs.B;
  return pref * (coeffs.A * coeffs.A + (2.0 * coeffs.A * coeffs.B + db) * u +
                 (coeffs.B * coeffs.B + db) * u * u);
}

double PartnerPotentialPair::v_minus(double r) const {
  if (!(r > 0.0)) throw std::domain_error("v_minus: r must be > 0");
  const double u = screened_ratio(coeffs.delta, r);
  const double db = coeffs.delta * coeffs.B;
  return pref * (coeffs.A * coeffs.A + (2.0 * coeffs.A * coeffs.B - db) * u +
                 (coeffs.B * coeffs.B - db) * u * u);
}

PartnerPotentialPair partner_potentials(const SuperpotentialCoeffs& coeffs,
                                        const PotentialSpec& spec) {
  return {coeffs, spec.hbar * spec.hbar / (2.0 * spec.mu)};
}

double shape_invariance_remainder(const PotentialSpec& spec, int l, int i) {
  if (i < 1) throw std::invalid_argument("shape_invariance_remainder: i must be >= 1");
  const SuperpotentialCoeffs prev = shifted_coeffs(spec, l, i - 1);
  const SuperpotentialCoeffs next = shifted_coeffs(spec, l, i);
  if (!(next.B > 0.0)) throw std::domain_error("shape_invariance_remainder: B + i delta <= 0");
  const double pref = spec.hbar * spec.hbar / (2.0 * spec.mu);
  return pref * (prev.A * prev.A - next.A * next.A);
}

EnergyResult energy_susy(const PotentialSpec& spec, const QuantumNumbers& q) {
  q.validate();
  EnergyResult res = ground_energy(spec, q.l);
  for (int i = 1; i <= q.n_r; ++i) res.energy += shape_invariance_remainder(spec, q.l, i);
  res.bound = res.energy < 0.0;
  res.dimensionless = dimensionless(spec, res.energy);
  const SuperpotentialCoeffs top = shifted_coeffs(spec, q.l, q.n_r);
  res.sqrt_c = -top.A / spec.delta;
  res.big_k = q.l + 1.0;
  return res;
}

}  // namespace hulthen::susy
