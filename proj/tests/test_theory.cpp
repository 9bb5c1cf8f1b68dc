// Copyright 2026 The hllab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <doctest.h>

#include "hllab/theory.hpp"

using namespace hllab;

TEST_SUITE_BEGIN("theory");

TEST_CASE("regime classification is total and has the boundary on the high side") {
  CHECK(classify_regime(2, 1.0) == Regime::Unsupported);
  CHECK(classify_regime(2, 1.999) == Regime::Unsupported);
  CHECK(classify_regime(2, 2.0) == Regime::SupNormAtPEqualsM);
  CHECK(classify_regime(2, 3.0) == Regime::Subquadratic);
  CHECK(classify_regime(2, 4.0) == Regime::HighP);
  CHECK(classify_regime(2, kInf) == Regime::HighP);
  CHECK(classify_regime(3, 3.0) == Regime::SupNormAtPEqualsM);
  CHECK(classify_regime(3, 5.9) == Regime::Subquadratic);
  CHECK(classify_regime(3, 6.0) == Regime::HighP);
  CHECK_THROWS_AS(classify_regime(1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(classify_regime(2, 0.5), std::invalid_argument);
}

TEST_CASE("multilinear exponent values") {
  CHECK(multilinear_exponent(2, kInf) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(multilinear_exponent(2, kInf) == 4.0 / 3.0);
  CHECK(multilinear_exponent(3, 4.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(multilinear_exponent(2, 2.0) == kInf);
  CHECK_THROWS_AS(multilinear_exponent(2, 1.5), std::invalid_argument);

  // both branch formulas, written out, agree at the boundary p = 2m
  for (const int m : {2, 3, 4}) {
    const double p = 2.0 * m;
    const double high = 2.0 * m * p / (m * p + p - 2.0 * m);
    const double sub = p / (p - m);
    CHECK(high == 2.0);
    CHECK(sub == 2.0);
    CHECK(multilinear_exponent(m, p) == 2.0);
  }
}

TEST_CASE("polynomial exponent reproduces the classical degree-2 display") {
  CHECK(polynomial_exponent(2, 4.0) == 2.0);
  CHECK(polynomial_exponent(2, 2.0) == kInf);
  CHECK(polynomial_exponent(3, 3.0) == kInf);
  // 4p/(3p-4) above 4, p/(p-2) below
  for (const double p : {4.0, 4.5, 6.0, 10.0, 64.0}) {
    CHECK(polynomial_exponent(2, p) ==
          doctest::Approx(4.0 * p / (3.0 * p - 4.0)).epsilon(1e-14));
  }
  for (const double p : {2.5, 3.0, 3.5, 3.99}) {
    CHECK(polynomial_exponent(2, p) == doctest::Approx(p / (p - 2.0)).epsilon(1e-14));
  }
}

TEST_CASE("exponents decrease in p toward the degree-only limit") {
  for (const int m : {2, 3, 4}) {
    double prev = kInf;
    for (double p = m + 0.01; p < 200.0; p *= 1.17) {
      const double e = multilinear_exponent(m, p);
      CHECK(e <= prev + 1e-13);
      prev = e;
    }
    const double limit = 2.0 * m / (m + 1.0);
    CHECK(multilinear_exponent(m, kInf) == doctest::Approx(limit).epsilon(1e-15));
    CHECK(prev >= limit - 1e-13);
  }
}

TEST_CASE("bilinear mixed exponent pairs") {
  const ExponentPair p33 = bilinear_mixed_exponents(3.0, 3.0);
  CHECK(p33.inner == 2.0);
  CHECK(p33.outer == doctest::Approx(3.0).epsilon(1e-15));
  const ExponentPair p44 = bilinear_mixed_exponents(4.0, 4.0);
  CHECK(p44.outer == doctest::Approx(2.0).epsilon(1e-15));
  // at p = q = inf the outer exponent degenerates to 1; interpolating the
  // two orders then lands on the classical 4/3, which pins the limit down
  const ExponentPair pinf = bilinear_mixed_exponents(kInf, kInf);
  CHECK(pinf.inner == 2.0);
  CHECK(pinf.outer == doctest::Approx(1.0).epsilon(1e-15));
  const ExponentPair mid = interpolate_exponent_pairs(ExponentPair{2.0, pinf.outer},
                                                      ExponentPair{pinf.outer, 2.0}, 0.5);
  CHECK(mid.inner == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(mid.outer == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(mid.outer == doctest::Approx(symmetric_exponent(kInf, kInf)).epsilon(1e-15));

  CHECK_THROWS_AS(bilinear_mixed_exponents(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(bilinear_mixed_exponents(1.5, 8.0), std::invalid_argument);
}

TEST_CASE("symmetric exponent values") {
  CHECK(symmetric_exponent(kInf, kInf) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(symmetric_exponent(4.0, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(symmetric_exponent(8.0, 8.0) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK_THROWS_AS(symmetric_exponent(3.0, 3.0), std::invalid_argument);
}

TEST_CASE("harmonic interpolation of exponent pairs") {
  const ExponentPair mid = interpolate_exponent_pairs({2.0, 3.0}, {3.0, 2.0}, 0.5);
  CHECK(mid.inner == doctest::Approx(2.4).epsilon(1e-15));
  CHECK(mid.outer == doctest::Approx(2.4).epsilon(1e-15));
  // algebraically this is 4pq/(3pq-2p-2q) at p = q = 3 (the named operation
  // itself only admits 1/p + 1/q <= 1/2, so evaluate the formula raw here)
  CHECK(4.0 * 9.0 / (3.0 * 9.0 - 6.0 - 6.0) == doctest::Approx(2.4).epsilon(1e-15));

  const ExponentPair at0 = interpolate_exponent_pairs({2.0, 5.0}, {7.0, 3.0}, 0.0);
  CHECK(at0.inner == 7.0);
  CHECK(at0.outer == 3.0);

  for (const auto& [p, q] : {std::pair{4.0, 6.0}, {5.0, 5.0}, {6.0, 8.0}}) {
    const double lambda = bilinear_mixed_exponents(p, q).outer;
    const ExponentPair m2 =
        interpolate_exponent_pairs({2.0, lambda}, {lambda, 2.0}, 0.5);
    const double mu = symmetric_exponent(p, q);
    CHECK(m2.inner == doctest::Approx(mu).epsilon(1e-14));
    CHECK(m2.outer == doctest::Approx(mu).epsilon(1e-14));
  }
  CHECK_THROWS_AS(interpolate_exponent_pairs({2.0, 2.0}, {2.0, 2.0}, 1.5),
                  std::invalid_argument);
}

TEST_CASE("interpolation identity holds across the admissible grid") {
  const double grid[] = {4.0, 4.5, 5.0, 6.0, 8.0, 12.0, 20.0, kInf};
  int points = 0;
  for (const double p : grid) {
    for (const double q : grid) {
      if (inv_exponent(p) + inv_exponent(q) > 0.5) continue;
      ++points;
      const double lambda = bilinear_mixed_exponents(p, q).outer;
      const ExponentPair mu =
          interpolate_exponent_pairs({2.0, lambda}, {lambda, 2.0}, 0.5);
      const double sym = symmetric_exponent(p, q);
      CHECK(std::abs(mu.inner - sym) <= 1e-12);
      CHECK(std::abs(mu.outer - sym) <= 1e-12);
      // the interpolant is an intermediate harmonic mean of 2 and lambda
      CHECK(mu.outer >= std::min(2.0, lambda) - 1e-12);
      CHECK(mu.outer <= std::max(2.0, lambda) + 1e-12);
    }
  }
  CHECK(points >= 20);
}

TEST_CASE("random-form growth exponents") {
  CHECK(ksz_alpha(kInf) == 0.5);
  CHECK(ksz_alpha(2.0) == 0.0);
  CHECK(ksz_alpha(3.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(ksz_alpha(1.5) == 0.0);

  const double inf2[] = {kInf, kInf};
  CHECK(ksz_exponent(2, inf2) == doctest::Approx(1.5).epsilon(1e-15));
  const double three2[] = {3.0, 3.0};
  CHECK(ksz_exponent(2, three2) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  const double two2[] = {2.0, 2.0};
  CHECK(ksz_exponent(2, two2) == 0.5);
  const double one[] = {kInf};
  CHECK_THROWS_AS(ksz_exponent(2, one), std::invalid_argument);
}

TEST_CASE("constant bounds") {
  const double sqrt2 = std::sqrt(2.0);
  const double cpi = 2.0 / std::sqrt(M_PI);

  const ConstantBound real22 = constant_upper_bound(2, 2.0, Field::Real, BoundMethod::General);
  CHECK(real22.value == doctest::Approx(4.0 * sqrt2).epsilon(1e-14));
  CHECK(real22.provenance == "p-equals-m");

  const ConstantBound real33 = constant_upper_bound(3, 3.0, Field::Real, BoundMethod::General);
  CHECK(real33.value == doctest::Approx(54.0).epsilon(1e-13));

  const ConstantBound cplx33 = constant_upper_bound(3, 3.0, Field::Complex, BoundMethod::General);
  CHECK(cplx33.value == doctest::Approx(cpi * cpi * 27.0).epsilon(1e-13));

  // the sharper degree-2 complex bound at p = 2 comes from the Harris
  // polarization factor; the generic factor gives the weaker 8/sqrt(pi)
  const ConstantBound harris = constant_upper_bound(2, 2.0, Field::Complex, BoundMethod::Harris);
  CHECK(harris.value == doctest::Approx(4.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(harris.provenance == "harris");
  const ConstantBound general = constant_upper_bound(2, 2.0, Field::Complex, BoundMethod::General);
  CHECK(general.value == doctest::Approx(8.0 / std::sqrt(M_PI)).epsilon(1e-14));

  // Harris never exceeds the generic factor once p >= 2
  for (const double p : {2.0, 2.5, 3.0, 4.0, 8.0, kInf}) {
    for (const int m : {2, 4}) {
      if (p < m) continue;
      const double h = constant_upper_bound(m, p, Field::Complex, BoundMethod::Harris).value;
      const double g = constant_upper_bound(m, p, Field::Complex, BoundMethod::General).value;
      CHECK(h <= g * (1.0 + 1e-14));
    }
  }

  const ConstantBound mult = constant_upper_bound(3, 7.0, Field::Real, BoundMethod::Multilinear);
  CHECK(mult.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mult.provenance == "multilinear");

  // degree-2 complex constant at any p > 2 flattens to twice the base
  for (const double p : {2.5, 3.0, 3.7}) {
    const double h = constant_upper_bound(2, p, Field::Complex, BoundMethod::Harris).value;
    CHECK(h == doctest::Approx(2.0 * cpi).epsilon(1e-13));
  }

  CHECK_THROWS_AS(constant_upper_bound(2, 2.0, Field::Real, BoundMethod::Harris),
                  std::invalid_argument);
  CHECK_THROWS_AS(constant_upper_bound(3, 3.0, Field::Complex, BoundMethod::Harris),
                  std::invalid_argument);
  CHECK_THROWS_AS(constant_upper_bound(2, 1.5, Field::Real, BoundMethod::General),
                  std::invalid_argument);
  CHECK_THROWS_AS(bound_method_from_name("nope"), std::invalid_argument);

  // every bound is at least 1
  for (const int m : {2, 3, 4}) {
    for (const double p : {static_cast<double>(m), 2.0 * m, kInf}) {
      CHECK(constant_upper_bound(m, p, Field::Real, BoundMethod::General).value >= 1.0);
      CHECK(constant_upper_bound(m, p, Field::Complex, BoundMethod::General).value >= 1.0);
    }
  }
}

TEST_SUITE_END();
