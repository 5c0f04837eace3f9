#include <doctest.h>

#include <cmath>
#include <vector>

#include "hulthen/nu.hpp"
#include "hulthen/specfun.hpp"

using namespace hulthen;

namespace {

PotentialSpec atomic(double delta, double c0) {
  PotentialSpec spec;
  spec.delta = delta;
  spec.c0 = c0;
  return spec;
}

}  // namespace

TEST_CASE("nu parameters for the 2p tower at delta = 0.025") {
  const PotentialSpec spec = atomic(0.025, 0.0);
  const QuantumNumbers q{0, 1};
  const nu::NuParameters p = nu::nu_parameters(spec, q, 361.0);

  CHECK(p.a == doctest::Approx(441.25).epsilon(1e-14));
  CHECK(p.b == doctest::Approx(800.0).epsilon(1e-14));
  CHECK(p.c == doctest::Approx(361.0).epsilon(1e-14));
  CHECK(p.c + p.a - p.b == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(p.root_cab() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(p.big_k() == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(p.selected.branch == nu::PiBranch::minus_kminus);
  CHECK(p.selected.k == doctest::Approx(21.0).epsilon(1e-12));
  CHECK(p.selected.intercept == doctest::Approx(19.0).epsilon(1e-12));   // pi(0) = sqrt(c)
  CHECK(p.selected.slope == doctest::Approx(-21.0).epsilon(1e-12));      // -(1/2 + sqrt c + root)
  CHECK(p.selected.tau_slope() == doctest::Approx(-43.0).epsilon(1e-12));

  CHECK_THROWS_AS(nu::nu_parameters(spec, q, -1.0), std::domain_error);
}

TEST_CASE("pi candidates: defining identity and branch signs") {
  const double a = 441.25, b = 800.0, c = 361.0;
  const auto cands = nu::pi_candidates(a, b, c);

  for (const auto& cand : cands) {
    // (pi + s/2)^2 = s^2 (a-k) - s (b-k) + c once the discriminant vanishes
    for (double s = 0.1; s < 0.95; s += 0.1) {
      const double lhs = std::pow(cand.pi(s) + 0.5 * s, 2);
      const double rhs = s * s * (a - cand.k) - s * (b - cand.k) + c;
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }

  // outer-plus branches climb, so they are rejected
  CHECK(cands[2].tau_slope() > 0.0);
  CHECK(cands[3].tau_slope() > 0.0);
  CHECK(nu::select_branch(cands).branch == nu::PiBranch::minus_kminus);

  CHECK_THROWS_AS(nu::pi_candidates(1.0, 10.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(nu::pi_candidates(1.0, 10.0, 2.0), std::domain_error);  // c + a - b < 0

  std::vector<nu::PiCandidate> uphill{{nu::PiBranch::plus_kplus, 0.0, 1.0, 0.0}};
  CHECK_THROWS_AS(nu::select_branch(uphill), std::runtime_error);
}

TEST_CASE("pi candidates: degenerate c = 0 merges the k roots") {
  const auto cands = nu::pi_candidates(0.25, 0.0, 0.0);
  CHECK(cands[0].k == cands[1].k);
  CHECK(cands[0].k == doctest::Approx(0.0));
  nu::NuParameters p;
  p.a = 0.25;
  p.b = 0.0;
  p.c = 0.0;
  CHECK(p.big_k() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("closed-form epsilon^2") {
  CHECK(nu::epsilon_sq_closed_form({0, 1}, 80.0, 0.0) == doctest::Approx(361.0).epsilon(1e-14));
  CHECK(nu::epsilon_sq_closed_form({0, 1}, 80.0, 1.0 / 12.0) ==
        doctest::Approx(361.0 - 1.0 / 6.0).epsilon(1e-14));
  // threshold: alpha^2 = N^2 puts the level exactly at zero
  CHECK(nu::epsilon_sq_closed_form({0, 1}, 4.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("quantization residual: root, bracketing, n_r = 0 collapse") {
  const PotentialSpec spec = atomic(0.025, 0.0);
  const QuantumNumbers q{0, 1};
  CHECK(std::abs(nu::quantization_residual(spec, q, 361.0)) < 1e-9);

  const double below = nu::quantization_residual(spec, q, 360.0);
  const double above = nu::quantization_residual(spec, q, 362.0);
  CHECK(below * above < 0.0);
  CHECK(below != 0.0);

  // at n_r = 0 the right-hand side collapses and the residual is the bare lambda bar
  const double eps_sq = 350.0;
  const double lam = q.lambda();
  const double a = 0.25 + eps_sq + lam * spec.c0 + spec.alpha_sq();
  const double b = 2.0 * eps_sq + 2.0 * lam * spec.c0 + spec.alpha_sq() - lam;
  const double c = eps_sq + lam * spec.c0;
  const double expected = b - 2.0 * c - 2.0 * std::sqrt(c * c + c * (a - b)) -
                          (0.5 + std::sqrt(c) + std::sqrt(c + a - b));
  CHECK(nu::quantization_residual(spec, q, eps_sq) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("closed-form levels against the published grid") {
  CHECK(nu::energy_nu(atomic(0.025, 0.0), {0, 1}).energy ==
        doctest::Approx(-0.1128125).epsilon(1e-13));
  CHECK(nu::energy_nu(atomic(0.025, 1.0 / 12.0), {0, 1}).energy ==
        doctest::Approx(-0.1127604166666667).epsilon(1e-12));
  CHECK(nu::energy_nu(atomic(0.05, 1.0 / 12.0), {1, 1}).energy ==
        doctest::Approx(-0.0331597222222222).epsilon(1e-12));
  // formula value for the row printed as -0.45000
  CHECK(nu::energy_nu(atomic(0.2, 0.0), {0, 1}).energy ==
        doctest::Approx(-0.045).epsilon(1e-13));
  CHECK(nu::energy_nu(atomic(0.1, 0.0), {2, 1}).energy ==
        doctest::Approx(-0.00125).epsilon(1e-12));

  const EnergyResult res = nu::energy_nu(atomic(0.025, 0.0), {0, 1});
  CHECK(res.bound);
  CHECK(res.method == Method::nu);
  CHECK(res.dimensionless.epsilon_sq == doctest::Approx(361.0).epsilon(1e-13));
  CHECK(res.sqrt_c == doctest::Approx(19.0).epsilon(1e-13));
  CHECK(res.big_k == doctest::Approx(2.0));
}

TEST_CASE("unbound levels are flagged, not errors") {
  // the C0 shift outweighs the shallow well here
  const EnergyResult res = nu::energy_nu(atomic(0.5, 1.0 / 12.0), {0, 1});
  CHECK(res.energy > 0.0);
  CHECK(!res.bound);
  CHECK_THROWS_AS(nu::wavefunction(atomic(0.5, 1.0 / 12.0), {0, 1}), std::domain_error);
  CHECK_THROWS_AS(nu::normalization_constant(atomic(0.5, 1.0 / 12.0), {0, 1}),
                  std::domain_error);
}

TEST_CASE("K identity across the sweep") {
  for (int n_r = 0; n_r <= 6; ++n_r) {
    for (int l = 0; l <= 5; ++l) {
      for (double delta : {0.025, 0.05, 0.15, 0.35}) {
        for (double c0 : {0.0, 1.0 / 12.0}) {
          const PotentialSpec spec = atomic(delta, c0);
          const QuantumNumbers q{n_r, l};
          const double eps_sq = nu::epsilon_sq_closed_form(q, spec.alpha_sq(), c0);
          if (eps_sq < 0.0) continue;
          const nu::NuParameters p = nu::nu_parameters(spec, q, eps_sq);
          CHECK(std::abs(p.big_k() - (l + 1.0)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("wavefunction shape: degree-0 factor, endpoints, node counts") {
  const PotentialSpec spec = atomic(0.025, 0.0);
  const nu::RadialWavefunction chi(spec, {0, 1});

  for (double s : {0.05, 0.3, 0.8}) {
    const double explicit_form =
        chi.norm_const() * std::pow(s, 19.0) * std::pow(1.0 - s, 2.0);
    CHECK(chi.chi_s(s) == doctest::Approx(explicit_form).epsilon(1e-12));
  }
  CHECK(chi.chi_s(0.0) == 0.0);
  CHECK(chi.chi_s(1.0) == 0.0);
  CHECK(chi.chi_r(0.0) == 0.0);
  CHECK_THROWS_AS(chi.chi_s(-0.1), std::domain_error);
  CHECK_THROWS_AS(chi.chi_s(1.2), std::domain_error);
  CHECK_THROWS_AS(chi.full_radial(0.0), std::domain_error);

  // consistency of the two evaluation routes
  for (double r : {0.5, 3.0, 17.0, 60.0}) {
    CHECK(chi.chi_r(r) ==
          doctest::Approx(chi.chi_s(std::exp(-spec.delta * r))).epsilon(1e-11));
    CHECK(chi.full_radial(r) == doctest::Approx(chi.chi_r(r) / r).epsilon(1e-14));
  }

  auto nodes = [](const nu::RadialWavefunction& wf, double r_hi) {
    int count = 0;
    double prev = 0.0;
    for (double r = 1e-3; r < r_hi; r += r_hi / 4000.0) {
      const double v = wf.chi_r(r);
      if (std::abs(v) < 1e-12) continue;
      if (prev != 0.0 && v * prev < 0.0) ++count;
      prev = v;
    }
    return count;
  };
  CHECK(nodes(chi, 100.0) == 0);
  CHECK(nodes(nu::RadialWavefunction(atomic(0.025, 0.0), {1, 1}), 200.0) == 1);
  CHECK(nodes(nu::RadialWavefunction(atomic(0.025, 0.0), {4, 1}), 500.0) == 4);
}

TEST_CASE("wavefunction decays through the default box edge") {
  const nu::RadialWavefunction chi(atomic(0.025, 1.0 / 12.0), {0, 1});
  double peak = 0.0;
  for (double r = 0.5; r < 40.0; r += 0.25) peak = std::max(peak, std::abs(chi.chi_r(r)));
  CHECK(std::abs(chi.chi_r(50.0 / 0.025)) < 1e-12 * peak);
}

TEST_CASE("normalization constants: frozen values and quadrature") {
  struct Case {
    double delta;
    QuantumNumbers q;
    double expected;
  };
  const Case cases[] = {
      {0.025, {0, 1}, 326.0881782585808},  {0.05, {1, 1}, 11.75288784327525},
      {0.025, {4, 1}, 1.820778094539216},  {0.05, {0, 4}, 6.549809157525126},
      {0.35, {0, 1}, 1.114722946287742},
  };
  for (const Case& c : cases) {
    const PotentialSpec spec = atomic(c.delta, 0.0);
    CHECK(nu::normalization_constant(spec, c.q) ==
          doctest::Approx(c.expected).epsilon(1e-12));

    const nu::RadialWavefunction chi(spec, c.q);
    const double r_max = std::max(40.0 / c.delta, 21.0 / (c.delta * chi.sqrt_c()));
    const auto quad = specfun::quadrature(
        [&](double r) {
          const double v = chi.chi_r(r);
          return v * v;
        },
        0.0, r_max, 64);
    CHECK(quad.converged);
    CHECK(std::abs(quad.value - 1.0) < 1e-8);
  }
}

TEST_CASE("normalization constant scales as sqrt(delta) at fixed exponents") {
  PotentialSpec base = atomic(0.025, 0.0);
  PotentialSpec doubled = atomic(0.05, 0.0);
  doubled.z = 2.0;  // keeps alpha^2, hence sqrt_c and K, unchanged
  const double ratio =
      nu::normalization_constant(doubled, {0, 1}) / nu::normalization_constant(base, {0, 1});
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}
