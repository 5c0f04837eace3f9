#pragma once

#include "hulthen/model.hpp"

namespace hulthen::susy {

/// Coefficients of the superpotential ansatz
///   W(r) = -(hbar/sqrt(2 mu)) (A + B e^{-delta r}/(1 - e^{-delta r})).
/// Matching the Riccati equation fixes B = delta (l+1) and
/// A = B/2 - delta^2 alpha^2 / (2B); normalizability needs B > 0, A < 0.
struct SuperpotentialCoeffs {
  double A = 0.0;  ///< constant term (inverse length)
  double B = 0.0;  ///< screened-term coefficient (inverse length)
  int l = 0;
  double delta = 0.0;
  double w_scale = 0.0;  ///< hbar / sqrt(2 mu)
};

SuperpotentialCoeffs superpotential_coeffs(const PotentialSpec& spec, int l);

/// Coefficients after `steps` applications of the shape-invariance map
/// B -> B + delta, with A recomputed from the shifted B.
SuperpotentialCoeffs shifted_coeffs(const PotentialSpec& spec, int l, int steps);

/// W(r) for r > 0.
double superpotential(const SuperpotentialCoeffs& coeffs, double r);

/// Pointwise defect of the Riccati equation
///   W^2 - (hbar/sqrt(2 mu)) W' - (V_eff_approx(r) - e0),
/// in energy units. Zero for the matched coefficients and ground energy.
double riccati_residual(const SuperpotentialCoeffs& coeffs, const PotentialSpec& spec,
                        const QuantumNumbers& q, double e0, double r);

/// Ground level of the l tower:
///   E_0 = hbar^2 l(l+1) C0 delta^2/(2 mu) - hbar^2 A^2/(2 mu).
EnergyResult ground_energy(const PotentialSpec& spec, int l);

/// Nodeless ground eigenfunction chi(r) = N0 e^{A r}(1 - e^{-delta r})^{B/delta},
/// with N0 fixed numerically by quadrature.
class GroundWavefunction {
 public:
  /// Throws std::domain_error when A >= 0 (not normalizable).
  GroundWavefunction(const PotentialSpec& spec, int l);

  double operator()(double r) const;
  double norm() const { return n0_; }
  const SuperpotentialCoeffs& coeffs() const { return coeffs_; }

 private:
  PotentialSpec spec_;
  SuperpotentialCoeffs coeffs_;
  double n0_;
};

/// Partner potentials V_± = W^2 ± (hbar/sqrt(2 mu)) W', expanded in
/// u = e^{-delta r}/(1-e^{-delta r}):
///   V_± = (hbar^2/2 mu) [A^2 + (2AB ± delta B) u + (B^2 ± delta B) u^2].
struct PartnerPotentialPair {
  SuperpotentialCoeffs coeffs;
  double pref = 0.0;  ///< hbar^2 / (2 mu)

  double v_plus(double r) const;
  double v_minus(double r) const;
};

PartnerPotentialPair partner_potentials(const SuperpotentialCoeffs& coeffs,
                                        const PotentialSpec& spec);

/// r-independent remainder of the shape-invariance relation,
///   R(B_i) = V_+[B_{i-1}](r) - V_-[B_i](r) = (hbar^2/2 mu)(A_{i-1}^2 - A_i^2),
/// where A_j belongs to B_j = B + j delta. Requires i >= 1.
double shape_invariance_remainder(const PotentialSpec& spec, int l, int i);

/// Level from the shape-invariance chain: the ground energy of the tower plus
/// the telescoping sum of remainders R(B_1) + ... + R(B_{n_r}).
EnergyResult energy_susy(const PotentialSpec& spec, const QuantumNumbers& q);

}  // namespace hulthen::susy
