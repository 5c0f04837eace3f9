#pragma once

#include <cmath>
#include <stdexcept>

namespace hulthen {

/// Constant in the improved centrifugal approximation
/// 1/r^2 ~ delta^2 [C0 + e^{-delta r}/(1-e^{-delta r})^2].
/// C0 = 0 recovers the Greene-Aldrich scheme.
inline constexpr double improved_c0 = 1.0 / 12.0;

/// Physical parameters of the screened-Coulomb (Hulthen) problem,
///   V(r) = -Z e^2 delta e^{-delta r} / (1 - e^{-delta r}).
///
/// Defaults are atomic units (hbar = mu = e = 1) with unit charge.
/// `z` carries the full Z e^2 product, so other unit systems fold
/// e^2 into it.
struct PotentialSpec {
  double z = 1.0;      ///< charge strength Z e^2
  double delta = 0.025;  ///< screening parameter (inverse length)
  double mu = 1.0;     ///< reduced mass
  double hbar = 1.0;
  double c0 = improved_c0;  ///< centrifugal-approximation constant, >= 0

  /// alpha^2 = 2 mu Z e^2 / (hbar^2 delta)
  double alpha_sq() const { return 2.0 * mu * z / (hbar * hbar * delta); }

  /// Throws std::invalid_argument if any parameter is out of range.
  void validate() const;
};

/// Radial (n_r >= 0) and orbital (l >= 0) quantum numbers.
/// The principal label is N = n_r + l + 1.
struct QuantumNumbers {
  int n_r = 0;
  int l = 0;

  int principal() const { return n_r + l + 1; }
  double lambda() const { return static_cast<double>(l) * (l + 1); }
  void validate() const;
};

/// Dimensionless combinations used throughout:
///   alpha^2 = 2 mu Z e^2 / (hbar^2 delta),  eps^2 = -2 mu E / (hbar^2 delta^2).
/// eps^2 > 0 marks a bound state; eps^2 < 0 signals E > 0.
struct DimensionlessParams {
  double alpha_sq = 0.0;
  double epsilon_sq = 0.0;
};

DimensionlessParams dimensionless(const PotentialSpec& spec, double energy);

/// Inverse of `dimensionless` in the energy slot: E = -hbar^2 delta^2 eps^2 / (2 mu).
double energy_from_epsilon_sq(const PotentialSpec& spec, double epsilon_sq);

enum class Method { nu, susy, numeric_exact, numeric_approx };

const char* method_name(Method m);

/// One computed level together with the quantities the derivation runs through.
struct EnergyResult {
  double energy = 0.0;
  Method method = Method::nu;
  bool bound = false;  ///< energy < 0
  DimensionlessParams dimensionless;
  double sqrt_c = 0.0;  ///< s-exponent of the eigenfunction; > 0 iff normalizable
  double big_k = 0.0;   ///< (1-s)-exponent, equals l+1
};

enum class CentrifugalMode { exact, approximated };

/// e^{-delta r} / (1 - e^{-delta r}) = 1/(e^{delta r} - 1), evaluated
/// cancellation-free via expm1. Valid for r > 0.
inline double screened_ratio(double delta, double r) { return 1.0 / std::expm1(delta * r); }

/// Bare Hulthen potential V(r) = -Z e^2 delta e^{-delta r}/(1-e^{-delta r}).
double potential_hulthen(const PotentialSpec& spec, double r);

/// Effective potential for orbital momentum l: the bare potential plus either
/// the exact centrifugal barrier hbar^2 l(l+1)/(2 mu r^2) or its screened
/// approximation hbar^2 l(l+1) delta^2 (C0 + s/(1-s)^2)/(2 mu), s = e^{-delta r}.
double potential_effective(const PotentialSpec& spec, const QuantumNumbers& q, double r,
                           CentrifugalMode mode);

}  // namespace hulthen
