#include <doctest.h>

#include <cmath>

#include "hulthen/model.hpp"

using namespace hulthen;

TEST_CASE("bare potential: frozen value, Coulomb limit, decay") {
  PotentialSpec spec;
  spec.delta = 0.05;
  // independent arbitrary-precision evaluation of -delta e^{-1}/(1-e^{-1})
  CHECK(potential_hulthen(spec, 20.0) ==
        doctest::Approx(-0.029098835343466321).epsilon(1e-14));

  spec.delta = 0.025;
  for (double r : {1e-2, 1e-4, 1e-6}) {
    // V(r) r -> -Z e^2 with an O(delta r) defect
    CHECK(std::abs(potential_hulthen(spec, r) * r + 1.0) < spec.delta * r + 1e-13);
  }

  const double far = potential_hulthen(spec, 2e4);
  CHECK(far < 0.0);
  CHECK(far > -1e-100);

  CHECK_THROWS_AS(potential_hulthen(spec, 0.0), std::domain_error);
  CHECK_THROWS_AS(potential_hulthen(spec, -1.0), std::domain_error);
}

TEST_CASE("bare potential is negative and increasing toward zero") {
  PotentialSpec spec;
  spec.delta = 0.1;
  double prev = potential_hulthen(spec, 1e-3);
  for (double r = 2e-3; r < 200.0; r *= 1.3) {
    const double v = potential_hulthen(spec, r);
    CHECK(v < 0.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("effective potential: l = 0 modes coincide") {
  PotentialSpec spec;
  spec.delta = 0.05;
  const QuantumNumbers q{0, 0};
  for (double r : {0.1, 1.0, 10.0, 100.0}) {
    CHECK(potential_effective(spec, q, r, CentrifugalMode::exact) ==
          potential_effective(spec, q, r, CentrifugalMode::approximated));
  }
}

TEST_CASE("effective potential: approximation quality at small delta r") {
  PotentialSpec spec;  // c0 = 1/12
  spec.delta = 0.025;
  const QuantumNumbers q{0, 1};
  const double exact = potential_effective(spec, q, 1.0, CentrifugalMode::exact);
  const double approx = potential_effective(spec, q, 1.0, CentrifugalMode::approximated);
  CHECK(std::abs(exact - approx) / std::abs(exact) < 1e-3);
}

TEST_CASE("effective potential: improved scheme at delta r = 1e-3") {
  PotentialSpec spec;
  spec.delta = 0.05;
  const double r = 1e-3 / spec.delta;
  for (int l = 1; l <= 5; ++l) {
    const QuantumNumbers q{0, l};
    const double exact = potential_effective(spec, q, r, CentrifugalMode::exact);
    const double approx = potential_effective(spec, q, r, CentrifugalMode::approximated);
    CHECK(std::abs(approx - exact) < 1e-5 * std::abs(exact));
  }
}

TEST_CASE("effective potential: c0 = 0 is the Greene-Aldrich form") {
  PotentialSpec spec;
  spec.c0 = 0.0;
  spec.delta = 0.08;
  const QuantumNumbers q{0, 1};
  for (double r : {0.5, 2.0, 11.0}) {
    const double s = std::exp(-spec.delta * r);
    const double ga = potential_hulthen(spec, r) +
                      spec.delta * spec.delta * q.lambda() / 2.0 * s / ((1.0 - s) * (1.0 - s));
    CHECK(potential_effective(spec, q, r, CentrifugalMode::approximated) ==
          doctest::Approx(ga).epsilon(1e-12));
  }
}

TEST_CASE("dimensionless map and its inverse") {
  PotentialSpec spec;  // atomic units, Z = 1
  CHECK(spec.alpha_sq() == doctest::Approx(80.0).epsilon(1e-15));

  const DimensionlessParams p = dimensionless(spec, -0.1128125);
  CHECK(p.alpha_sq == doctest::Approx(80.0).epsilon(1e-15));
  CHECK(p.epsilon_sq == doctest::Approx(361.0).epsilon(1e-13));

  CHECK(dimensionless(spec, 0.0).epsilon_sq == 0.0);

  for (double e : {-0.5, -1e-3, 0.7}) {
    const double back = energy_from_epsilon_sq(spec, dimensionless(spec, e).epsilon_sq);
    CHECK(back == doctest::Approx(e).epsilon(1e-15));
  }
}

TEST_CASE("parameter validation") {
  PotentialSpec spec;
  spec.delta = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = PotentialSpec{};
  spec.mu = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = PotentialSpec{};
  spec.c0 = -0.1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_NOTHROW(PotentialSpec{}.validate());

  CHECK_THROWS_AS((QuantumNumbers{-1, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuantumNumbers{0, -2}.validate()), std::invalid_argument);
  CHECK(QuantumNumbers{1, 2}.principal() == 4);
  CHECK(QuantumNumbers{0, 3}.lambda() == 12.0);
}
