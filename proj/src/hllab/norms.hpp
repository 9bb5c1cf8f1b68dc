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

#ifndef HLLAB_NORMS_HPP
#define HLLAB_NORMS_HPP

#include <span>
#include <vector>

#include "hllab/form.hpp"
#include "hllab/polynomial.hpp"

namespace hllab {

/// (sum v_i^r)^(1/r) over non-negative magnitudes, max for r = inf.
/// Scaled by the largest magnitude so small/large r stay finite.
/// Rejects r <= 0.
double lp_aggregate(std::span<const double> magnitudes, double r);

/// l_r norm of the coefficient multiset: the sum runs over multi-indices
/// for polynomials and over all m-tuples for forms; r = inf is the largest
/// absolute value.
double coeff_norm(const HomogeneousPolynomial& P, double r);
double coeff_norm(const MultilinearForm& T, double r);

/// Bilinear mixed norm, inner exponent over the FIRST index j, outer over
/// the second index k:
///   ( sum_k ( sum_j |A_{jk}|^{r_inner} )^{r_outer/r_inner} )^{1/r_outer}
/// with sup replacing a sum at an infinite exponent. Rejects m != 2 and
/// non-positive exponents.
double mixed_norm_bilinear(const MultilinearForm& A, double r_inner, double r_outer);

/// l_p norm of a point (modulus per coordinate), p in (0, inf].
double lp_norm(std::span<const Cplx> x, double p);
double lp_norm(std::span<const double> x, double p);

}  // namespace hllab

#endif
