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

#include "hllab/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hllab/tolerances.hpp"

namespace hllab {

MultilinearForm polarize(const HomogeneousPolynomial& P) {
  const int n = P.dimension();
  const int m = P.degree();
  MultilinearForm L(n, m, P.field());
  // precompute L(e^alpha) = a_alpha / C(m, alpha) per multiset
  std::map<MultiIndex, Cplx, GradedLexLess> values;
  for (const auto& [alpha, a] : P.coefficients()) {
    values[alpha] = a / static_cast<double>(multinomial(m, alpha));
  }
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  for (std::size_t flat = 0; flat < L.entry_count(); ++flat) {
    L.unflatten(flat, idx);
    const MultiIndex alpha = histogram_of_tuple(idx, n);
    auto it = values.find(alpha);
    if (it != values.end()) L.set_entry_flat(flat, it->second);
  }
  return L;
}

HomogeneousPolynomial restrict_diagonal(const MultilinearForm& L) {
  double scale = 0.0;
  for (const Cplx& t : L.entries()) scale = std::max(scale, std::abs(t));
  const double tol = Tolerances::symmetry * std::max(1.0, scale);
  if (L.max_asymmetry() > tol)
    throw std::invalid_argument("restrict_diagonal requires a symmetric form");

  const int n = L.dimension();
  const int m = L.arity();
  HomogeneousPolynomial P(n, m, L.field());
  for (const MultiIndex& alpha : enumerate_multi_indices(n, m)) {
    const std::vector<int> tuple = alpha.basis_tuple();
    const Cplx value = static_cast<double>(multinomial(m, alpha)) * L.entry(tuple);
    if (value != Cplx(0.0, 0.0)) P.set_coefficient(alpha, value);
  }
  return P;
}

MultilinearForm symmetrize(const MultilinearForm& T) {
  const int n = T.dimension();
  const int m = T.arity();
  // group-sum pass: the mean over all m! permutations equals the mean over
  // the distinct rearrangements of the index tuple
  std::map<MultiIndex, Cplx, GradedLexLess> sums;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    T.unflatten(flat, idx);
    sums[histogram_of_tuple(idx, n)] += T.entries()[flat];
  }
  MultilinearForm out(n, m, T.field());
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    out.unflatten(flat, idx);
    const MultiIndex alpha = histogram_of_tuple(idx, n);
    const double count = static_cast<double>(multinomial(m, alpha));
    out.set_entry_flat(flat, sums[alpha] / count);
  }
  return out;
}

}  // namespace hllab
