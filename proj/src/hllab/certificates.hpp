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

#ifndef HLLAB_CERTIFICATES_HPP
#define HLLAB_CERTIFICATES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hllab/optimize.hpp"
#include "hllab/theory.hpp"

namespace hllab {

/// The diagonal bilinear form A_n(x, y) = sum_j x_j y_j (identity tensor).
MultilinearForm diagonal_form(int n);

/// Exact norm n^{1/lambda} of A_n on l_p x l_q, lambda = pq/(pq-p-q);
/// equality holds at the constant unit vectors. Requires 1/p + 1/q < 1.
double diagonal_norm_exact(int n, double p, double q);

/// coeff_norm(object, exponent) / norm lower bound. The denominator is a
/// lower bound, so the ratio is an upper estimate of the true ratio.
/// Rejects objects that evaluate to zero.
double ratio(const HomogeneousPolynomial& P, double p, double exponent,
             const AscentOptions& opt = {});
double ratio(const MultilinearForm& T, const BallSpec& balls, double exponent,
             const AscentOptions& opt = {});

struct RatioSearchResult {
  double best_ratio = 0.0;
  HomogeneousPolynomial best_object;
  long evaluations = 0;
  std::uint64_t seed = 0;
};

/// Lower bound on the optimal constant sup_P coeff_norm/||P|| for the given
/// configuration: seeded random coefficient vectors on the Euclidean
/// sphere (the ratio is scale invariant), coordinate-descent polish, and a
/// careful re-evaluation whenever the leader changes. budget counts ratio
/// evaluations.
RatioSearchResult search_constant_lower(int m, int n, double p, Field field,
                                        double exponent, long budget,
                                        std::uint64_t seed);

/// Extreme polynomials of the unit ball on the Euclidean plane:
/// P(x, y) = a x^2 - a y^2 + c xy with a = sign * sqrt(4 - c^2)/2.
/// Every member has sup norm exactly 1 on the l_2 ball. Rejects |c| > 2.
HomogeneousPolynomial choi_kim_family(double c, int sign);

/// Random m-linear form with all N^m coefficients in {-1, +1},
/// deterministic for a fixed seed.
MultilinearForm ksz_random_form(int m, int N, std::uint64_t seed);

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// max |log v_i - fit(log s_i)|
  double residual = 0.0;
};

/// Ordinary least squares of log(values) against log(sizes). Needs at
/// least 3 points, all positive.
GrowthFit fit_growth(std::span<const double> sizes, std::span<const double> values);

/// Log-log growth record of a measured quantity over problem sizes.
struct SharpnessReport {
  std::vector<double> sizes;
  std::vector<double> observed;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  /// Lower bound on the outer exponent s implied by the measured growth,
  /// from 1/2 + 1/s = slope (inf when the slope does not exceed 1/2).
  double implied_bound = 0.0;
  /// Growth exponent predicted by the random-form bound.
  double theoretical_target = 0.0;
};

struct SharpnessCell {
  int size = 0;
  int rep = 0;
  std::uint64_t seed = 0;
  double norm_lower = 0.0;
};

struct SharpnessOptions {
  int seeds_per_size = 5;
  AscentOptions ascent;
  /// When set, receives one record per (size, rep) cell.
  std::vector<SharpnessCell>* cells_sink = nullptr;
};

/// Random sign forms at each size: median norm lower bound over the seeds,
/// log-log slope against the ksz growth exponent. The mixed coefficient
/// norm with exponents (2, s) is N^{1/2 + 1/s} exactly for sign tensors;
/// callers can assert that against mixed_norm_bilinear.
SharpnessReport sharpness_experiment(int m, const BallSpec& ps, ExponentPair pair,
                                     std::span<const int> Ns, std::uint64_t seed,
                                     const SharpnessOptions& opt = {});

/// ratio(P, p_i, exponent) along a decreasing sequence p_i in (m, 2m).
std::vector<double> limit_trace_p_to_m(const HomogeneousPolynomial& P,
                                       std::span<const double> p_sequence,
                                       double exponent,
                                       const AscentOptions& opt = {});

struct InterchangeResult {
  double lhs = 0.0;  // inner exponent 2 over j, outer lambda over k
  double rhs = 0.0;  // indices and exponents interchanged
  bool holds = false;
};

/// Nested-norm comparison with the smaller exponent outermost on the left:
/// for lambda <= 2, lhs >= rhs up to roundoff slack. Rejects lambda > 2
/// (the comparison genuinely fails beyond 2) and lambda <= 0.
InterchangeResult minkowski_interchange_check(const MultilinearForm& A, double lambda);

}  // namespace hllab

#endif
