#pragma once

#include <array>
#include <span>

#include "hulthen/model.hpp"

namespace hulthen::nu {

/// The four sign choices of the linear pi(s) polynomial: outer sign of the
/// square root times the two roots k_+/k_- of the zero-discriminant condition.
enum class PiBranch { plus_kplus, minus_kplus, plus_kminus, minus_kminus };

const char* pi_branch_name(PiBranch b);

/// One candidate pi(s) = intercept + slope * s with its k value.
struct PiCandidate {
  PiBranch branch = PiBranch::minus_kminus;
  double k = 0.0;
  double slope = 0.0;
  double intercept = 0.0;

  double pi(double s) const { return intercept + slope * s; }
  /// tau(s) = (1 - s) + 2 pi(s); the bound-state branch needs tau' < 0.
  double tau(double s) const { return 1.0 - s + 2.0 * pi(s); }
  double tau_slope() const { return -1.0 + 2.0 * slope; }
};

/// Quadratic-form parameters of the reduced hypergeometric-type equation.
/// With lambda = l(l+1):
///   a = 1/4 + eps^2 + lambda C0 + alpha^2
///   b = 2 eps^2 + 2 lambda C0 + alpha^2 - lambda
///   c = eps^2 + lambda C0
/// Algebraically c + a - b = (l + 1/2)^2, so K = 1/2 + sqrt(c+a-b) = l + 1.
struct NuParameters {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  PiCandidate selected;  ///< bound-state branch, with its k

  double root_cab() const;  ///< sqrt(c + a - b)
  double big_k() const;     ///< 1/2 + sqrt(c + a - b)
};

/// Candidates in selection-priority order: the minus_kminus form (the one
/// whose phi(s) = s^{sqrt c}(1-s)^K decays at both endpoints) comes first.
/// Requires c >= 0 and c + a - b >= 0, else std::domain_error.
std::array<PiCandidate, 4> pi_candidates(double a, double b, double c);

/// First candidate with negative tau slope, in the priority order above.
/// Throws std::runtime_error if none qualifies.
PiCandidate select_branch(std::span<const PiCandidate> candidates);

/// Assembles a, b, c for the given state and eps^2 and runs the branch
/// selection. Requires eps^2 >= 0.
NuParameters nu_parameters(const PotentialSpec& spec, const QuantumNumbers& q, double epsilon_sq);

/// eps^2 = [ (l+n+1)/2 - alpha^2/(2(l+n+1)) ]^2 - l(l+1) C0, the closed-form
/// root of the quantization condition.
double epsilon_sq_closed_form(const QuantumNumbers& q, double alpha_sq, double c0);

/// Difference between the two sides of the polynomial-degree quantization
/// condition at the given eps^2; vanishes iff eps^2 is the level of (n_r, l).
double quantization_residual(const PotentialSpec& spec, const QuantumNumbers& q,
                             double epsilon_sq);

/// Closed-form level of the approximated effective potential. Unbound results
/// (possible once the C0 shift outweighs the well) are flagged, not errors.
EnergyResult energy_nu(const PotentialSpec& spec, const QuantumNumbers& q);

/// Normalization constant of chi = C s^{sqrt c}(1-s)^K P_{n_r}^{(2 sqrt c, 2K-1)}(1-2s)
/// under int_0^inf |chi(r)|^2 dr = 1; the measure factor is dr = -ds/(delta s).
double normalization_constant(const PotentialSpec& spec, const QuantumNumbers& q);

/// Normalized bound-state eigenfunction, evaluable in s = e^{-delta r} or r.
class RadialWavefunction {
 public:
  /// Throws std::domain_error when the state has no normalizable eigenfunction.
  RadialWavefunction(const PotentialSpec& spec, const QuantumNumbers& q);

  /// chi as a function of s on [0, 1]; zero limits at both endpoints.
  double chi_s(double s) const;
  /// chi as a function of r >= 0.
  double chi_r(double r) const;
  /// Full radial factor R(r) = chi(r)/r, r > 0.
  double full_radial(double r) const;

  double sqrt_c() const { return sqrt_c_; }
  double big_k() const { return big_k_; }
  int degree() const { return q_.n_r; }
  double norm_const() const { return norm_; }
  double energy() const { return energy_; }
  const PotentialSpec& spec() const { return spec_; }
  const QuantumNumbers& quantum_numbers() const { return q_; }

 private:
  PotentialSpec spec_;
  QuantumNumbers q_;
  double sqrt_c_;
  double big_k_;
  double norm_;
  double energy_;
};

/// Factory matching the construction above.
RadialWavefunction wavefunction(const PotentialSpec& spec, const QuantumNumbers& q);

}  // namespace hulthen::nu
