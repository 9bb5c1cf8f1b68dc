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

#ifndef HLLAB_POLYNOMIAL_HPP
#define HLLAB_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <vector>

#include "hllab/multi_index.hpp"
#include "hllab/scalar.hpp"

namespace hllab {

/// Degree-m homogeneous polynomial P(x) = sum_{|alpha|=m} a_alpha x^alpha
/// on n variables. Coefficients are kept sparse (only nonzero entries) in
/// canonical graded order. Immutable in spirit: operations return new values.
class HomogeneousPolynomial {
 public:
  using CoefficientMap = std::map<MultiIndex, Cplx, GradedLexLess>;

  /// m >= 1 and n >= 1; degree 0 is rejected.
  HomogeneousPolynomial(int n, int m, Field field);

  int dimension() const { return n_; }
  int degree() const { return m_; }
  Field field() const { return field_; }

  /// Stores a coefficient; zero values erase the key. Rejects keys whose
  /// length is not n or degree is not m, and nonzero imaginary parts on
  /// real-field polynomials.
  void set_coefficient(const MultiIndex& alpha, Cplx value);
  Cplx coefficient(const MultiIndex& alpha) const;
  const CoefficientMap& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// sum_alpha a_alpha x^alpha. Rejects points of the wrong length.
  Cplx operator()(std::span<const Cplx> x) const;
  Cplx operator()(std::span<const double> x) const;

  /// Complex gradient (dP/dx_1, ..., dP/dx_n) at x.
  std::vector<Cplx> gradient(std::span<const Cplx> x) const;

  HomogeneousPolynomial scaled(Cplx t) const;

  bool operator==(const HomogeneousPolynomial& o) const;

 private:
  int n_;
  int m_;
  Field field_;
  CoefficientMap coeffs_;
};

/// Convenience builder used all over the tests and experiments:
/// P = x_1 x_2 on R^2 (the bilinear monomial with norm 1/2 on the
/// Euclidean ball).
HomogeneousPolynomial monomial_x1x2();

}  // namespace hllab

#endif
