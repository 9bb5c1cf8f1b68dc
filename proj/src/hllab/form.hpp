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

#ifndef HLLAB_FORM_HPP
#define HLLAB_FORM_HPP

#include <span>
#include <vector>

#include "hllab/multi_index.hpp"
#include "hllab/scalar.hpp"

namespace hllab {

/// m-linear form on (K^n)^m stored as the dense coefficient tensor
/// T(e_{j1}, ..., e_{jm}), n^m entries in row-major order (first slot
/// index is the most significant digit).
class MultilinearForm {
 public:
  MultilinearForm(int n, int m, Field field);

  int dimension() const { return n_; }
  int arity() const { return m_; }
  Field field() const { return field_; }
  std::size_t entry_count() const { return entries_.size(); }

  std::size_t flat_index(std::span<const int> idx) const;
  /// Decodes a flat index back into slot indices.
  void unflatten(std::size_t flat, std::span<int> idx) const;

  Cplx entry(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
  void set_entry(std::span<const int> idx, Cplx value);
  void set_entry_flat(std::size_t flat, Cplx value);
  std::span<const Cplx> entries() const { return entries_; }

  /// Multilinear contraction T(x_1, ..., x_m). Rejects arity or dimension
  /// mismatches.
  Cplx operator()(std::span<const std::vector<Cplx>> points) const;

  /// The linear functional phi on the given slot obtained by freezing all
  /// other arguments: phi_j = T(x_1, ..., e_j, ..., x_m). points[slot] is
  /// ignored.
  std::vector<Cplx> slot_functional(std::span<const std::vector<Cplx>> points, int slot) const;

  /// Largest absolute entry deviation under index permutations; 0 for a
  /// symmetric form.
  double max_asymmetry() const;

  /// m = 2 only: swaps the two slots.
  MultilinearForm transposed() const;

 private:
  int n_;
  int m_;
  Field field_;
  std::vector<Cplx> entries_;
};

}  // namespace hllab

#endif
