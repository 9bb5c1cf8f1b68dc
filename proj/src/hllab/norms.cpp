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

#include "hllab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hllab {

double lp_aggregate(std::span<const double> magnitudes, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("norm exponent must be positive");
  double mx = 0.0;
  for (double v : magnitudes) mx = std::max(mx, v);
  if (mx == 0.0) return 0.0;
  if (std::isinf(r)) return mx;
  double s = 0.0;
  for (double v : magnitudes) {
    if (v > 0.0) s += std::pow(v / mx, r);
  }
  return mx * std::pow(s, 1.0 / r);
}

double coeff_norm(const HomogeneousPolynomial& P, double r) {
  std::vector<double> mags;
  mags.reserve(P.coefficients().size());
  for (const auto& [alpha, a] : P.coefficients()) mags.push_back(std::abs(a));
  return lp_aggregate(mags, r);
}

double coeff_norm(const MultilinearForm& T, double r) {
  std::vector<double> mags;
  mags.reserve(T.entry_count());
  for (const Cplx& t : T.entries()) mags.push_back(std::abs(t));
  return lp_aggregate(mags, r);
}

double mixed_norm_bilinear(const MultilinearForm& A, double r_inner, double r_outer) {
  if (A.arity() != 2) throw std::invalid_argument("mixed norm is defined for bilinear forms only");
  if (!(r_inner > 0.0) || !(r_outer > 0.0)) throw std::invalid_argument("norm exponent must be positive");
  const int n = A.dimension();
  std::vector<double> column(static_cast<std::size_t>(n));
  std::vector<double> inner(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const int idx[2] = {j, k};
      column[static_cast<std::size_t>(j)] = std::abs(A.entry(idx));
    }
    inner[static_cast<std::size_t>(k)] = lp_aggregate(column, r_inner);
  }
  return lp_aggregate(inner, r_outer);
}

double lp_norm(std::span<const Cplx> x, double p) {
  std::vector<double> mags(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
  return lp_aggregate(mags, p);
}

double lp_norm(std::span<const double> x, double p) {
  std::vector<double> mags(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
  return lp_aggregate(mags, p);
}

}  // namespace hllab
