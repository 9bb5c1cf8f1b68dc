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

#include "hllab/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace hllab {

MultiIndex::MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw std::invalid_argument("multi-index exponents must be non-negative");
  }
}

int MultiIndex::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

std::vector<int> MultiIndex::basis_tuple() const {
  std::vector<int> tuple;
  tuple.reserve(static_cast<std::size_t>(degree()));
  for (int i = 0; i < size(); ++i) {
    for (int k = 0; k < exp_[static_cast<std::size_t>(i)]; ++k) tuple.push_back(i);
  }
  return tuple;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  return s + ")";
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];  // larger leading exponent first
  }
  return false;
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("enumerate_multi_indices requires n >= 1 and m >= 1");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  cur[0] = m;
  for (;;) {
    out.emplace_back(cur);
    // successor in x1-major descending order: take one unit from the
    // rightmost positive entry before the tail, park it together with the
    // tail on the next position
    int i = n - 2;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) break;
    const int tail = cur[static_cast<std::size_t>(n - 1)];
    cur[static_cast<std::size_t>(n - 1)] = 0;
    cur[static_cast<std::size_t>(i)] -= 1;
    cur[static_cast<std::size_t>(i + 1)] = tail + 1;
  }
  return out;
}

std::uint64_t multinomial(int m, const MultiIndex& alpha) {
  if (alpha.degree() != m) throw std::invalid_argument("multinomial: degree(alpha) must equal m");
  if (m > 20) throw std::invalid_argument("multinomial: m > 20 overflows 64-bit integers");
  // product of binomials C(a_1+...+a_i, a_i); every partial value divides
  // the final multinomial, so intermediates stay within 64 bits
  std::uint64_t result = 1;
  int running = 0;
  for (int i = 0; i < alpha.size(); ++i) {
    for (int k = 1; k <= alpha[i]; ++k) {
      ++running;
      result = result * static_cast<std::uint64_t>(running) / static_cast<std::uint64_t>(k);
    }
  }
  return result;
}

MultiIndex histogram_of_tuple(std::span<const int> tuple, int n) {
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  for (int j : tuple) {
    if (j < 0 || j >= n) throw std::invalid_argument("tuple index out of range");
    ++h[static_cast<std::size_t>(j)];
  }
  return MultiIndex(std::move(h));
}

}  // namespace hllab
