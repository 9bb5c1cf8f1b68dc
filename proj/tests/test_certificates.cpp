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

#include "hllab/certificates.hpp"
#include "hllab/norms.hpp"
#include "hllab/tolerances.hpp"
#include "test_support.hpp"

using namespace hllab;
using namespace hllab::testing;

TEST_SUITE_BEGIN("certificates");

TEST_CASE("diagonal forms") {
  const MultilinearForm a1 = diagonal_form(1);
  CHECK(a1.entry_count() == 1);
  CHECK(a1.entries()[0].real() == 1.0);

  const MultilinearForm a3 = diagonal_form(3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const int idx[2] = {j, k};
      CHECK(a3.entry(idx).real() == (j == k ? 1.0 : 0.0));
    }
  }
  for (const double r : {1.0, 2.0, 3.0}) {
    CHECK(coeff_norm(a3, r) == doctest::Approx(std::pow(3.0, 1.0 / r)).epsilon(1e-14));
  }
}

TEST_CASE("closed-form diagonal norms match the alternating maximizer") {
  CHECK(diagonal_norm_exact(4, 4.0, 4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(diagonal_norm_exact(1, kInf, kInf) == 1.0);
  CHECK(diagonal_norm_exact(9, 3.0, 3.0) ==
        doctest::Approx(std::pow(9.0, 1.0 / 3.0)).epsilon(1e-15));
  CHECK(std::pow(9.0, 1.0 / 3.0) == doctest::Approx(2.08008).epsilon(1e-5));
  CHECK_THROWS_AS(diagonal_norm_exact(4, 2.0, 2.0), std::invalid_argument);

  AscentOptions opt;
  opt.restarts = 8;
  opt.seed = 41;
  for (const auto& [p, q] : {std::pair{4.0, 4.0}, {3.0, 3.0}, {6.0, 3.0}, {kInf, 5.0}}) {
    for (const int n : {2, 5, 16}) {
      const double exact = diagonal_norm_exact(n, p, q);
      const double est = form_norm_lower(diagonal_form(n), BallSpec{{p, q}}, opt).value;
      CHECK(std::abs(est - exact) <= Tolerances::diagonal_norm_rel * exact);
    }
  }
}

TEST_CASE("coefficient-to-norm ratios of the bilinear monomial") {
  AscentOptions opt;
  opt.restarts = 8;
  opt.seed = 43;
  CHECK(ratio(monomial_x1x2(), 2.0, kInf, opt) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(ratio(monomial_x1x2(), 3.0, kInf, opt) ==
        doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-8));

  HomogeneousPolynomial sq(1, 2, Field::Real);
  sq.set_coefficient(MultiIndex({2}), Cplx(1.0, 0.0));
  CHECK(ratio(sq, 2.0, kInf, opt) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(ratio(HomogeneousPolynomial(2, 2, Field::Real), 2.0, kInf, opt),
                  std::invalid_argument);
}

TEST_CASE("ratios are scale invariant") {
  AscentOptions opt;
  opt.restarts = 6;
  opt.seed = 47;
  Rng rng(53);
  const HomogeneousPolynomial P = random_polynomial(2, 2, Field::Real, rng);
  const double base = ratio(P, 2.0, kInf, opt);
  // powers of two rescale every floating step exactly
  for (const double t : {2.0, 0.5, -4.0}) {
    CHECK(ratio(P.scaled(Cplx(t, 0.0)), 2.0, kInf, opt) == base);
  }
  CHECK(ratio(P.scaled(Cplx(3.0, 0.0)), 2.0, kInf, opt) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("extreme family members have unit norm and the expected coefficients") {
  // eigenvalue oracle: the sup norm of a x^2 + b y^2 + c xy on the
  // Euclidean disc is the spectral radius of [[a, c/2], [c/2, b]]
  const HomogeneousPolynomial p2 = choi_kim_family(2.0, 1);
  CHECK(p2.coefficient(MultiIndex({1, 1})).real() == 2.0);
  CHECK(p2.coefficient(MultiIndex({2, 0})).real() == 0.0);
  CHECK(coeff_norm(p2, kInf) == 2.0);
  CHECK(quadratic_form_norm_2d(0.0, 0.0, 2.0) == 1.0);

  const HomogeneousPolynomial p0 = choi_kim_family(0.0, 1);
  CHECK(p0.coefficient(MultiIndex({2, 0})).real() == 1.0);
  CHECK(p0.coefficient(MultiIndex({0, 2})).real() == -1.0);
  CHECK(quadratic_form_norm_2d(1.0, -1.0, 0.0) == 1.0);

  const double c = std::sqrt(2.0);
  const HomogeneousPolynomial pc = choi_kim_family(c, 1);
  const double a = std::sqrt(2.0) / 2.0;
  CHECK(pc.coefficient(MultiIndex({2, 0})).real() == doctest::Approx(a).epsilon(1e-15));
  CHECK(coeff_norm(pc, kInf) == doctest::Approx(c).epsilon(1e-15));
  CHECK(quadratic_form_norm_2d(a, -a, c) == doctest::Approx(1.0).epsilon(1e-15));

  AscentOptions opt;
  opt.restarts = 8;
  opt.seed = 59;
  CHECK(poly_norm_lower(pc, 2.0, opt).value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ratio(pc, 2.0, kInf, opt) == doctest::Approx(c).epsilon(1e-7));

  CHECK_THROWS_AS(choi_kim_family(2.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(choi_kim_family(1.0, 2), std::invalid_argument);
}

TEST_CASE("family ceiling reaches 2 on a coarse scan") {
  AscentOptions opt;
  opt.restarts = 6;
  opt.seed = 61;
  double sup = 0.0;
  for (int k = -200; k <= 200; ++k) {
    const double c = std::clamp(k * 0.01, -2.0, 2.0);
    for (const int sign : {1, -1}) {
      const HomogeneousPolynomial P = choi_kim_family(c, sign);
      const double norm = poly_norm_lower(P, 2.0, opt).value;
      // every member is extreme with exact unit norm
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-7));
      sup = std::max(sup, coeff_norm(P, kInf) / norm);
    }
  }
  CHECK(std::abs(sup - 2.0) <= Tolerances::choi_kim_ceiling);
}

TEST_CASE("random sign forms are deterministic with unit-modulus entries") {
  const MultilinearForm a = ksz_random_form(2, 8, 99);
  const MultilinearForm b = ksz_random_form(2, 8, 99);
  const MultilinearForm c = ksz_random_form(2, 8, 100);
  bool identical = true, differs = false;
  for (std::size_t i = 0; i < a.entry_count(); ++i) {
    identical = identical && a.entries()[i] == b.entries()[i];
    differs = differs || a.entries()[i] != c.entries()[i];
    CHECK(std::abs(a.entries()[i].real()) == 1.0);
    CHECK(a.entries()[i].imag() == 0.0);
  }
  CHECK(identical);
  CHECK(differs);
  CHECK(coeff_norm(a, 2.0) == doctest::Approx(8.0).epsilon(1e-15));  // N^{m/2}
  const MultilinearForm t3 = ksz_random_form(3, 4, 7);
  CHECK(coeff_norm(t3, 2.0) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("log-log growth fits") {
  const double sizes[] = {4.0, 8.0, 16.0};
  const double values[] = {2.0, 2.0 * std::sqrt(2.0), 4.0};
  const GrowthFit fit = fit_growth(sizes, values);
  CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.residual <= 1e-12);

  const double lin_s[] = {2.0, 4.0, 8.0};
  const GrowthFit lin = fit_growth(lin_s, lin_s);
  CHECK(lin.slope == doctest::Approx(1.0).epsilon(1e-12));

  const double flat[] = {3.0, 3.0, 3.0};
  CHECK(fit_growth(lin_s, flat).slope == doctest::Approx(0.0).epsilon(1e-12));

  const double bad[] = {1.0, -2.0, 3.0};
  CHECK_THROWS_AS(fit_growth(lin_s, bad), std::invalid_argument);
  const double two_s[] = {1.0, 2.0};
  const double two_v[] = {1.0, 2.0};
  CHECK_THROWS_AS(fit_growth(std::span<const double>(two_s, 2), std::span<const double>(two_v, 2)),
                  std::invalid_argument);
}

TEST_CASE("sharpness experiments are reproducible and closed-form consistent") {
  const int Ns[] = {4, 8, 16};
  SharpnessOptions opt;
  opt.seeds_per_size = 3;
  opt.ascent.restarts = 8;
  std::vector<SharpnessCell> cells;
  opt.cells_sink = &cells;

  const BallSpec balls{{kInf, kInf}};
  const SharpnessReport r1 = sharpness_experiment(2, balls, {2.0, 1.0}, Ns, 2024, opt);
  opt.cells_sink = nullptr;
  const SharpnessReport r2 = sharpness_experiment(2, balls, {2.0, 1.0}, Ns, 2024, opt);
  CHECK(r1.slope == r2.slope);
  CHECK(r1.observed == r2.observed);
  CHECK(r1.theoretical_target == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(cells.size() == 9);
  // the implied bound comes from the measured slope alone
  CHECK(r1.implied_bound == 1.0 / (r1.slope - 0.5));

  // mixed coefficient norm of a sign tensor: all inner sums are full
  for (const SharpnessCell& cell : cells) {
    const MultilinearForm A = ksz_random_form(2, cell.size, cell.seed);
    const double mixed = mixed_norm_bilinear(A, 2.0, 1.0);
    CHECK(mixed == doctest::Approx(std::pow(cell.size, 1.5)).epsilon(1e-13));
  }

  CHECK_THROWS_AS(sharpness_experiment(2, balls, {2.0, 1.0}, std::vector<int>{4, 8}, 1, opt),
                  std::invalid_argument);
  CHECK_THROWS_AS(sharpness_experiment(2, balls, {2.0, 1.0}, std::vector<int>{4, 8, 8}, 1, opt),
                  std::invalid_argument);
}

TEST_CASE("limit traces toward p = m") {
  AscentOptions opt;
  opt.restarts = 8;
  opt.seed = 67;
  const double ps[] = {3.0, 2.5, 2.1};
  const std::vector<double> trace = limit_trace_p_to_m(monomial_x1x2(), ps, kInf, opt);
  REQUIRE(trace.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(trace[i] - std::pow(2.0, 2.0 / ps[i])) <= Tolerances::limit_trace_match);
  }
  // the trace climbs toward the p = 2 constant
  CHECK(trace[0] < trace[1]);
  CHECK(trace[1] < trace[2]);
  CHECK(trace[2] < 2.0 + 1e-9);

  HomogeneousPolynomial sq(1, 2, Field::Real);
  sq.set_coefficient(MultiIndex({2}), Cplx(1.0, 0.0));
  for (const double r : limit_trace_p_to_m(sq, ps, kInf, opt)) {
    CHECK(r == doctest::Approx(1.0).epsilon(1e-10));
  }

  const double out_of_range[] = {5.0};
  CHECK_THROWS_AS(limit_trace_p_to_m(monomial_x1x2(), out_of_range, kInf, opt),
                  std::invalid_argument);
  const double not_decreasing[] = {2.5, 3.0};
  CHECK_THROWS_AS(limit_trace_p_to_m(monomial_x1x2(), not_decreasing, kInf, opt),
                  std::invalid_argument);
}

TEST_CASE("interchange comparisons") {
  const MultilinearForm id2 = diagonal_form(2);
  const InterchangeResult at1 = minkowski_interchange_check(id2, 1.0);
  CHECK(at1.lhs == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(at1.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(at1.holds);

  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const MultilinearForm A = random_form(4, 2, Field::Real, rng);
    const InterchangeResult at2 = minkowski_interchange_check(A, 2.0);
    const double collapse = coeff_norm(A, 2.0);
    CHECK(at2.lhs == doctest::Approx(collapse).epsilon(1e-12));
    CHECK(at2.rhs == doctest::Approx(collapse).epsilon(1e-12));
  }

  // the property suite: a thousand random 5x5 matrices at lambda = 1.5
  long failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const MultilinearForm A = random_form(5, 2, Field::Real, rng);
    failures += !minkowski_interchange_check(A, 1.5).holds;
  }
  CHECK(failures == 0);

  CHECK_THROWS_AS(minkowski_interchange_check(id2, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(minkowski_interchange_check(id2, 0.0), std::invalid_argument);
}

TEST_CASE("constant search reaches the known optima") {
  // one variable: the ratio is identically 1
  const RatioSearchResult one = search_constant_lower(2, 1, 2.0, Field::Real, kInf, 50, 3);
  CHECK(one.best_ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(one.evaluations <= 50);

  // the planar Euclidean optimum is 2, reached within a small budget
  const RatioSearchResult planar = search_constant_lower(2, 2, 2.0, Field::Real, kInf, 3000, 5);
  CHECK(planar.best_ratio >= 1.999);
  CHECK(planar.best_ratio <= 2.0 + 1e-6);
  CHECK(planar.evaluations <= 3000);

  // reproducible from the winning object
  AscentOptions opt;
  opt.restarts = 32;
  opt.seed = 73;
  const double re = ratio(planar.best_object, 2.0, kInf, opt);
  CHECK(std::abs(re - planar.best_ratio) <=
        Tolerances::ratio_reproducibility * (1.0 + planar.best_ratio));

  CHECK_THROWS_AS(search_constant_lower(2, 2, 2.0, Field::Real, kInf, 0, 1),
                  std::invalid_argument);
}

TEST_SUITE_END();
