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

#ifndef HLLAB_SCALAR_HPP
#define HLLAB_SCALAR_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace hllab {

// Scalar field of a polynomial or multilinear form. Complex scalars are
// (real, imaginary) pairs of doubles; |z| is the Euclidean modulus.
enum class Field { Real, Complex };

using Cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline const char* field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

inline Field field_from_name(const std::string& name) {
  if (name == "real") return Field::Real;
  if (name == "complex") return Field::Complex;
  throw std::invalid_argument("unknown scalar field: " + name);
}

// 1/p with the exponent conventions used throughout: 1/inf = 0.
inline double inv_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

}  // namespace hllab

#endif
