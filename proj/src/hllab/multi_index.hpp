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

#ifndef HLLAB_MULTI_INDEX_HPP
#define HLLAB_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hllab {

/// Exponent vector alpha = (alpha_1, ..., alpha_n) of a monomial x^alpha.
/// Length equals the ambient dimension; degree() is the sum of the entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  int size() const { return static_cast<int>(exp_.size()); }
  int degree() const;
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }

  /// Indices of the canonical basis tuple e^alpha: alpha_1 copies of 0,
  /// then alpha_2 copies of 1, and so on. Length is degree().
  std::vector<int> basis_tuple() const;

  std::string to_string() const;

  bool operator==(const MultiIndex& o) const { return exp_ == o.exp_; }

 private:
  std::vector<int> exp_;
};

/// Canonical enumeration/serialization order: by total degree first, ties
/// broken x1-major (larger leading exponents come first). For a fixed degree
/// this lists (m,0,...), then (m-1,1,0,...), ..., down to (0,...,0,m).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of length n and degree m in canonical order.
/// Exactly C(n+m-1, m) of them. Rejects n = 0 or m = 0.
std::vector<MultiIndex> enumerate_multi_indices(int n, int m);

/// m! / (alpha_1! ... alpha_n!). Requires degree(alpha) = m and m <= 20
/// (the result fits in 64 bits there; tensors of that order are out of
/// reach long before the bound matters).
std::uint64_t multinomial(int m, const MultiIndex& alpha);

/// Multi-index of length n counting occurrences in an index tuple.
MultiIndex histogram_of_tuple(std::span<const int> tuple, int n);

}  // namespace hllab

#endif
