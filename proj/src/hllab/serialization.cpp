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

#include "hllab/serialization.hpp"

#include <stdexcept>

namespace hllab {

using nlohmann::json;

namespace {

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw std::invalid_argument(std::string("expected numeric field '") + key + "'");
  return j.at(key).get<double>();
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("expected integer field '") + key + "'");
  return j.at(key).get<int>();
}

Field parse_field_tag(const json& j) {
  if (!j.contains("field") || !j.at("field").is_string())
    throw std::invalid_argument("expected string field 'field'");
  return field_from_name(j.at("field").get<std::string>());
}

}  // namespace

nlohmann::json to_json(const HomogeneousPolynomial& P) {
  json coeffs = json::array();
  for (const auto& [alpha, a] : P.coefficients()) {
    coeffs.push_back({{"alpha", alpha.exponents()}, {"re", a.real()}, {"im", a.imag()}});
  }
  return json{{"field", field_name(P.field())},
              {"n", P.dimension()},
              {"m", P.degree()},
              {"coeffs", std::move(coeffs)}};
}

HomogeneousPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  HomogeneousPolynomial P(int_field(j, "n"), int_field(j, "m"), parse_field_tag(j));
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw std::invalid_argument("expected array field 'coeffs'");
  for (const json& c : j.at("coeffs")) {
    if (!c.contains("alpha") || !c.at("alpha").is_array())
      throw std::invalid_argument("coefficient entries need an 'alpha' array");
    std::vector<int> exps;
    for (const json& e : c.at("alpha")) {
      if (!e.is_number_integer()) throw std::invalid_argument("alpha entries must be integers");
      exps.push_back(e.get<int>());
    }
    const MultiIndex alpha(std::move(exps));
    if (P.coefficient(alpha) != Cplx(0.0, 0.0))
      throw std::invalid_argument("duplicate multi-index " + alpha.to_string());
    P.set_coefficient(alpha, Cplx(number_field(c, "re"), number_field(c, "im")));
  }
  return P;
}

nlohmann::json to_json(const MultilinearForm& T) {
  json entries = json::array();
  for (const Cplx& t : T.entries()) entries.push_back({{"re", t.real()}, {"im", t.imag()}});
  return json{{"field", field_name(T.field())},
              {"n", T.dimension()},
              {"m", T.arity()},
              {"entries", std::move(entries)}};
}

MultilinearForm form_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("form JSON must be an object");
  MultilinearForm T(int_field(j, "n"), int_field(j, "m"), parse_field_tag(j));
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw std::invalid_argument("expected array field 'entries'");
  const json& entries = j.at("entries");
  if (entries.size() != T.entry_count())
    throw std::invalid_argument("entry array must hold exactly n^m values");
  for (std::size_t i = 0; i < T.entry_count(); ++i) {
    const json& e = entries[i];
    T.set_entry_flat(i, Cplx(number_field(e, "re"), number_field(e, "im")));
  }
  return T;
}

nlohmann::json to_json(const NormEstimate& e) {
  json witness = json::array();
  for (const auto& vec : e.witness) {
    json v = json::array();
    for (const Cplx& z : vec) v.push_back({{"re", z.real()}, {"im", z.imag()}});
    witness.push_back(std::move(v));
  }
  return json{{"value", e.value},
              {"witness", std::move(witness)},
              {"restarts_used", e.restarts_used},
              {"iterations", e.iterations},
              {"converged", e.converged},
              {"method", e.method},
              {"hyperparameters",
               {{"seed", e.seed},
                {"restarts", e.restarts_used}}}};
}

bool json_is_polynomial(const nlohmann::json& j) {
  if (j.is_object() && j.contains("coeffs")) return true;
  if (j.is_object() && j.contains("entries")) return false;
  throw std::invalid_argument("object JSON needs either 'coeffs' or 'entries'");
}

}  // namespace hllab
