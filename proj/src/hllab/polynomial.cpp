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

#include "hllab/polynomial.hpp"

#include <stdexcept>

namespace hllab {

namespace {

Cplx int_pow(Cplx base, int e) {
  Cplx r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int n, int m, Field field)
    : n_(n), m_(m), field_(field) {
  if (n < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
  if (m < 1) throw std::invalid_argument("polynomial degree must be >= 1");
}

void HomogeneousPolynomial::set_coefficient(const MultiIndex& alpha, Cplx value) {
  if (alpha.size() != n_) throw std::invalid_argument("multi-index length must equal the dimension");
  if (alpha.degree() != m_) throw std::invalid_argument("multi-index degree must equal the polynomial degree");
  if (field_ == Field::Real && value.imag() != 0.0)
    throw std::invalid_argument("real-field polynomial cannot hold a complex coefficient");
  if (value == Cplx(0.0, 0.0)) {
    coeffs_.erase(alpha);
  } else {
    coeffs_[alpha] = value;
  }
}

Cplx HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Cplx(0.0, 0.0) : it->second;
}

Cplx HomogeneousPolynomial::operator()(std::span<const Cplx> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  Cplx total(0.0, 0.0);
  for (const auto& [alpha, a] : coeffs_) {
    Cplx mono(1.0, 0.0);
    for (int i = 0; i < n_; ++i) {
      const int e = alpha[i];
      if (e) mono *= int_pow(x[static_cast<std::size_t>(i)], e);
    }
    total += a * mono;
  }
  return total;
}

Cplx HomogeneousPolynomial::operator()(std::span<const double> x) const {
  std::vector<Cplx> z(x.begin(), x.end());
  return (*this)(std::span<const Cplx>(z));
}

std::vector<Cplx> HomogeneousPolynomial::gradient(std::span<const Cplx> x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
  std::vector<Cplx> g(static_cast<std::size_t>(n_), Cplx(0.0, 0.0));
  for (const auto& [alpha, a] : coeffs_) {
    for (int j = 0; j < n_; ++j) {
      const int ej = alpha[j];
      if (!ej) continue;
      Cplx term = a * static_cast<double>(ej);
      for (int i = 0; i < n_; ++i) {
        const int e = (i == j) ? alpha[i] - 1 : alpha[i];
        if (e) term *= int_pow(x[static_cast<std::size_t>(i)], e);
      }
      g[static_cast<std::size_t>(j)] += term;
    }
  }
  return g;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(Cplx t) const {
  HomogeneousPolynomial out(n_, m_, field_ == Field::Real && t.imag() != 0.0 ? Field::Complex : field_);
  for (const auto& [alpha, a] : coeffs_) out.set_coefficient(alpha, a * t);
  return out;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& o) const {
  return n_ == o.n_ && m_ == o.m_ && field_ == o.field_ && coeffs_ == o.coeffs_;
}

HomogeneousPolynomial monomial_x1x2() {
  HomogeneousPolynomial p(2, 2, Field::Real);
  p.set_coefficient(MultiIndex({1, 1}), Cplx(1.0, 0.0));
  return p;
}

}  // namespace hllab
