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

#include "hllab/serialization.hpp"
#include "test_support.hpp"

using namespace hllab;
using namespace hllab::testing;
using nlohmann::json;

TEST_SUITE_BEGIN("serialization");

TEST_CASE("polynomial JSON shape and canonical coefficient order") {
  HomogeneousPolynomial P(2, 2, Field::Real);
  P.set_coefficient(MultiIndex({0, 2}), Cplx(3.0, 0.0));
  P.set_coefficient(MultiIndex({2, 0}), Cplx(1.0, 0.0));
  P.set_coefficient(MultiIndex({1, 1}), Cplx(2.0, 0.0));
  const json j = to_json(P);
  CHECK(j.at("field") == "real");
  CHECK(j.at("n") == 2);
  CHECK(j.at("m") == 2);
  REQUIRE(j.at("coeffs").size() == 3);
  CHECK(j.at("coeffs")[0].at("alpha") == json::array({2, 0}));
  CHECK(j.at("coeffs")[1].at("alpha") == json::array({1, 1}));
  CHECK(j.at("coeffs")[2].at("alpha") == json::array({0, 2}));
}

TEST_CASE("doubles survive the round trip bit-exactly") {
  Rng rng(3);
  for (const Field field : {Field::Real, Field::Complex}) {
    HomogeneousPolynomial P(3, 2, field);
    const double awkward[] = {0.1, 1.0 / 3.0, 1e-300, 3.141592653589793, -2.5e17};
    std::size_t k = 0;
    for (const MultiIndex& alpha : enumerate_multi_indices(3, 2)) {
      const double re = awkward[k % std::size(awkward)] * (1.0 + rng.uniform01());
      const double im = field == Field::Complex ? awkward[(k + 2) % std::size(awkward)] : 0.0;
      P.set_coefficient(alpha, Cplx(re, im));
      ++k;
    }
    const std::string text = to_json(P).dump();
    const HomogeneousPolynomial back = polynomial_from_json(json::parse(text));
    CHECK(back == P);
    // and the serialized text itself is a fixpoint
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("form round trip, row-major entries") {
  Rng rng(7);
  const MultilinearForm T = random_form(3, 3, Field::Complex, rng);
  const json j = to_json(T);
  CHECK(j.at("entries").size() == 27);
  const MultilinearForm back = form_from_json(j);
  REQUIRE(back.entry_count() == T.entry_count());
  for (std::size_t i = 0; i < T.entry_count(); ++i) {
    CHECK(back.entries()[i] == T.entries()[i]);
  }
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("parsing rejects malformed objects") {
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"field":"real","n":2,"m":2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(
                      R"({"field":"real","n":2,"m":2,"coeffs":[{"alpha":[1],"re":1,"im":0}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(
                      R"({"field":"real","n":2,"m":2,"coeffs":[{"alpha":[1,0],"re":1,"im":0}]})")),
                  std::invalid_argument);
  // duplicate keys
  CHECK_THROWS_AS(
      polynomial_from_json(json::parse(
          R"({"field":"real","n":2,"m":2,"coeffs":[{"alpha":[1,1],"re":1,"im":0},{"alpha":[1,1],"re":2,"im":0}]})")),
      std::invalid_argument);
  // imaginary part under a real field
  CHECK_THROWS_AS(polynomial_from_json(json::parse(
                      R"({"field":"real","n":2,"m":2,"coeffs":[{"alpha":[1,1],"re":1,"im":2}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(
                      R"({"field":"rational","n":2,"m":2,"coeffs":[]})")),
                  std::invalid_argument);
  // wrong entry count for a form
  CHECK_THROWS_AS(form_from_json(json::parse(
                      R"({"field":"real","n":2,"m":2,"entries":[{"re":1,"im":0}]})")),
                  std::invalid_argument);
}

TEST_CASE("object kind dispatch") {
  CHECK(json_is_polynomial(json::parse(R"({"coeffs":[]})")));
  CHECK_FALSE(json_is_polynomial(json::parse(R"({"entries":[]})")));
  CHECK_THROWS_AS(json_is_polynomial(json::parse(R"({"foo":1})")), std::invalid_argument);
}

TEST_CASE("norm estimate serialization carries witness and method") {
  NormEstimate e;
  e.value = 0.5;
  e.witness = {{Cplx(1.0 / std::sqrt(2.0), 0.0), Cplx(1.0 / std::sqrt(2.0), 0.0)}};
  e.restarts_used = 8;
  e.iterations = 100;
  e.converged = true;
  e.method = "projected-gradient";
  e.seed = 42;
  const json j = to_json(e);
  CHECK(j.at("value") == 0.5);
  CHECK(j.at("method") == "projected-gradient");
  CHECK(j.at("witness")[0].size() == 2);
  CHECK(j.at("witness")[0][0].at("re") == 1.0 / std::sqrt(2.0));
  CHECK(j.at("hyperparameters").at("seed") == 42);
  CHECK(j.at("hyperparameters").at("restarts") == 8);
}

TEST_SUITE_END();
