#include "hulthen/model.hpp"

#include <string>

namespace hulthen {

void PotentialSpec::validate() const {
  if (!(z > 0.0)) throw std::invalid_argument("PotentialSpec: charge strength z must be > 0");
  if (!(delta > 0.0)) throw std::invalid_argument("PotentialSpec: screening delta must be > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("PotentialSpec: reduced mass mu must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("PotentialSpec: hbar must be > 0");
  if (!(c0 >= 0.0)) throw std::invalid_argument("PotentialSpec: c0 must be >= 0");
}

void QuantumNumbers::validate() const {
  if (n_r < 0) throw std::invalid_argument("QuantumNumbers: n_r must be >= 0");
  if (l < 0) throw std::invalid_argument("QuantumNumbers: l must be >= 0");
}

DimensionlessParams dimensionless(const PotentialSpec& spec, double energy) {
  const double h2 = spec.hbar * spec.hbar;
  return {spec.alpha_sq(), -2.0 * spec.mu * energy / (h2 * spec.delta * spec.delta)};
}

double energy_from_epsilon_sq(const PotentialSpec& spec, double epsilon_sq) {
  const double h2 = spec.hbar * spec.hbar;
  return -h2 * spec.delta * spec.delta * epsilon_sq / (2.0 * spec.mu);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::nu: return "nu";
    case Method::susy: return "susy";
    case Method::numeric_exact: return "numeric-exact";
    case Method::numeric_approx: return "numeric-approx";
  }
  return "?";
}

double potential_hulthen(const PotentialSpec& spec, double r) {
  if (!(r > 0.0)) throw std::domain_error("potential_hulthen: r must be > 0");
  return -spec.z * spec.delta * screened_ratio(spec.delta, r);
}

double potential_effective(const PotentialSpec& spec, const QuantumNumbers& q, double r,
                           CentrifugalMode mode) {
  if (!(r > 0.0)) throw std::domain_error("potential_effective: r must be > 0");
  const double lam = q.lambda();
  const double pref = spec.hbar * spec.hbar * lam / (2.0 * spec.mu);
  double centrifugal;
  if (mode == CentrifugalMode::exact) {
    centrifugal = pref / (r * r);
  } else {
    // s/(1-s)^2 = u (1 + u) with u = s/(1-s)
    const double u = screened_ratio(spec.delta, r);
    centrifugal = pref * spec.delta * spec.delta * (spec.c0 + u * (1.0 + u));
  }
  return potential_hulthen(spec, r) + centrifugal;
}

}  // namespace hulthen
