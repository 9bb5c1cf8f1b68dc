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

#include "hllab/form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hllab {

namespace {

std::size_t checked_power(int n, int m) {
  std::size_t count = 1;
  for (int i = 0; i < m; ++i) {
    if (count > (static_cast<std::size_t>(1) << 28) / static_cast<std::size_t>(n))
      throw std::invalid_argument("form tensor too large (n^m exceeds the supported size)");
    count *= static_cast<std::size_t>(n);
  }
  return count;
}

}  // namespace

MultilinearForm::MultilinearForm(int n, int m, Field field)
    : n_(n), m_(m), field_(field) {
  if (n < 1) throw std::invalid_argument("form dimension must be >= 1");
  if (m < 1) throw std::invalid_argument("form arity must be >= 1");
  entries_.assign(checked_power(n, m), Cplx(0.0, 0.0));
}

std::size_t MultilinearForm::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != m_) throw std::invalid_argument("index tuple has wrong arity");
  std::size_t flat = 0;
  for (int s = 0; s < m_; ++s) {
    const int j = idx[static_cast<std::size_t>(s)];
    if (j < 0 || j >= n_) throw std::invalid_argument("index out of range");
    flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  return flat;
}

void MultilinearForm::unflatten(std::size_t flat, std::span<int> idx) const {
  for (int s = m_ - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(n_));
    flat /= static_cast<std::size_t>(n_);
  }
}

void MultilinearForm::set_entry(std::span<const int> idx, Cplx value) {
  set_entry_flat(flat_index(idx), value);
}

void MultilinearForm::set_entry_flat(std::size_t flat, Cplx value) {
  if (field_ == Field::Real && value.imag() != 0.0)
    throw std::invalid_argument("real-field form cannot hold a complex entry");
  entries_[flat] = value;
}

Cplx MultilinearForm::operator()(std::span<const std::vector<Cplx>> points) const {
  if (static_cast<int>(points.size()) != m_) throw std::invalid_argument("evaluation needs one point per slot");
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  }
  Cplx total(0.0, 0.0);
  std::vector<int> idx(static_cast<std::size_t>(m_), 0);
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    const Cplx t = entries_[flat];
    if (t == Cplx(0.0, 0.0)) {
      continue;
    }
    unflatten(flat, idx);
    Cplx prod = t;
    for (int s = 0; s < m_; ++s) prod *= points[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])];
    total += prod;
  }
  return total;
}

std::vector<Cplx> MultilinearForm::slot_functional(std::span<const std::vector<Cplx>> points, int slot) const {
  if (static_cast<int>(points.size()) != m_) throw std::invalid_argument("slot functional needs one point per slot");
  if (slot < 0 || slot >= m_) throw std::invalid_argument("slot out of range");
  std::vector<Cplx> phi(static_cast<std::size_t>(n_), Cplx(0.0, 0.0));
  std::vector<int> idx(static_cast<std::size_t>(m_), 0);
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    const Cplx t = entries_[flat];
    if (t == Cplx(0.0, 0.0)) continue;
    unflatten(flat, idx);
    Cplx prod = t;
    for (int s = 0; s < m_; ++s) {
      if (s == slot) continue;
      prod *= points[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])];
    }
    phi[static_cast<std::size_t>(idx[static_cast<std::size_t>(slot)])] += prod;
  }
  return phi;
}

double MultilinearForm::max_asymmetry() const {
  double worst = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(m_), 0);
  std::vector<int> sorted(static_cast<std::size_t>(m_), 0);
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    unflatten(flat, idx);
    sorted.assign(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    const Cplx canonical = entries_[flat_index(sorted)];
    worst = std::max(worst, std::abs(entries_[flat] - canonical));
  }
  return worst;
}

MultilinearForm MultilinearForm::transposed() const {
  if (m_ != 2) throw std::invalid_argument("transpose is defined for bilinear forms only");
  MultilinearForm out(n_, 2, field_);
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) {
      const int ij[2] = {j, k};
      const int ji[2] = {k, j};
      out.set_entry(ji, entry(ij));
    }
  }
  return out;
}

}  // namespace hllab
