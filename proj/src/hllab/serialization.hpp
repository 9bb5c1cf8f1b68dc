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

#ifndef HLLAB_SERIALIZATION_HPP
#define HLLAB_SERIALIZATION_HPP

#include <json.hpp>

#include "hllab/form.hpp"
#include "hllab/norm_estimate.hpp"
#include "hllab/polynomial.hpp"

namespace hllab {

// JSON shapes (doubles round-trip bit-exactly through the shortest decimal
// representation the serializer emits):
//
//   polynomial: {"field":"real"|"complex","n":...,"m":...,
//                "coeffs":[{"alpha":[...],"re":...,"im":...},...]}
//               coefficients listed in canonical graded order
//
//   form:       {"field":...,"n":...,"m":...,
//                "entries":[{"re":...,"im":...},...]}
//               flat row-major entry array, n^m entries
//
// Parsing rejects wrong shapes, duplicate or off-degree multi-indices and
// nonzero imaginary parts under a real field.

nlohmann::json to_json(const HomogeneousPolynomial& P);
HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultilinearForm& T);
MultilinearForm form_from_json(const nlohmann::json& j);

/// Witness vectors in full precision plus the method label and the
/// hyperparameters that produced the estimate.
nlohmann::json to_json(const NormEstimate& e);

/// Dispatches on the presence of "coeffs" vs "entries".
bool json_is_polynomial(const nlohmann::json& j);

}  // namespace hllab

#endif
