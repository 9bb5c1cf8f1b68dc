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

#ifndef HLLAB_THEORY_HPP
#define HLLAB_THEORY_HPP

#include <span>
#include <string>

#include "hllab/scalar.hpp"

namespace hllab {

// Closed-form calculators for the Hardy-Littlewood exponent regimes, the
// associated constant bounds, the Kahane-Salem-Zygmund growth exponents and
// the mixed-exponent interpolation rule. Infinity is a first-class exponent
// with the conventions 1/inf = 0 and p/(p-1) -> 1.

/// Regime of the coefficient-norm inequality as a function of (m, p),
/// total for m >= 2 and p in [1, inf]. The boundary p = 2m counts as
/// HighP; both exponent branches equal 2 there.
enum class Regime {
  SupNormAtPEqualsM,  // p = m: only the sup norm stays dimension-free
  Subquadratic,       // m < p < 2m: exponent p/(p-m)
  HighP,              // p >= 2m: exponent 2mp/(mp+p-2m)
  Unsupported,        // p < m
};

Regime classify_regime(int m, double p);
const char* regime_name(Regime r);

/// Optimal coefficient-norm exponent for m-linear forms on l_p^n:
/// 2mp/(mp+p-2m) for p >= 2m, p/(p-m) for m < p < 2m, inf at p = m.
/// Rejects p < m (Unsupported regime).
double multilinear_exponent(int m, double p);

/// Same exponent formulas for m-homogeneous polynomials; for m = 2 this
/// reproduces the classical pair 4p/(3p-4) on p >= 4 and p/(p-2) on
/// 2 < p <= 4.
double polynomial_exponent(int m, double p);

/// A pair of nested norm exponents (inner over the first index, outer over
/// the second).
struct ExponentPair {
  double inner = 0.0;
  double outer = 0.0;
};

/// Sharp mixed-norm exponents (2, lambda) with lambda = pq/(pq-p-q) for
/// bilinear forms on l_p x l_q; p, q >= 2 and 1/p + 1/q < 1, infinite
/// values handled by their limits (lambda = 1 at p = q = inf).
ExponentPair bilinear_mixed_exponents(double p, double q);

/// Optimal single exponent 4pq/(3pq-2p-2q) on the range 1/p + 1/q <= 1/2.
double symmetric_exponent(double p, double q);

/// Componentwise harmonic interpolation 1/out_i = theta/a_i+(1-theta)/b_i.
ExponentPair interpolate_exponent_pairs(ExponentPair a, ExponentPair b, double theta);

/// alpha(p) = 1/2 - 1/p for p >= 2, else 0; alpha(inf) = 1/2.
double ksz_alpha(double p);

/// Growth exponent 1/2 + sum_i alpha(p_i) of the random sign forms.
double ksz_exponent(int m, std::span<const double> ps);

enum class BoundMethod {
  Multilinear,  // base constant of the m-linear inequality
  General,      // base * (m!)^{m/p} * m^m/m!
  Harris,       // base * (m!)^{m/p} * (m^m/m!)^{|p-2|/p}; complex, m a power of 2
};

BoundMethod bound_method_from_name(const std::string& name);

struct ConstantBound {
  double value = 1.0;
  Field field = Field::Real;
  /// one of "multilinear", "lemma-factor", "harris", "p-equals-m"
  std::string provenance;
};

/// Upper bound on the optimal constant of the coefficient-norm inequality
/// for the given configuration. The multilinear base is (sqrt 2)^{m-1} for
/// real scalars and (2/sqrt pi)^{m-1} for complex scalars; the polynomial
/// bounds multiply in the polarization factor. Rejects p < m, and Harris
/// outside complex fields with m a power of 2.
ConstantBound constant_upper_bound(int m, double p, Field field, BoundMethod method);

}  // namespace hllab

#endif
