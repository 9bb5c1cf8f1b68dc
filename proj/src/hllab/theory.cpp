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

#include "hllab/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace hllab {

namespace {

void require_m_at_least_2(int m) {
  if (m < 2) throw std::invalid_argument("exponent formulas need m >= 2");
}

void require_supported(int m, double p) {
  if (classify_regime(m, p) == Regime::Unsupported)
    throw std::invalid_argument("p < m is outside the supported regimes");
}

double factorial(int m) {
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= static_cast<double>(k);
  return f;
}

double m_pow_m(int m) { return std::pow(static_cast<double>(m), static_cast<double>(m)); }

bool is_power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

}  // namespace

Regime classify_regime(int m, double p) {
  require_m_at_least_2(m);
  if (!(p >= 1.0)) throw std::invalid_argument("p must lie in [1, inf]");
  const double md = static_cast<double>(m);
  if (p < md) return Regime::Unsupported;
  if (p == md) return Regime::SupNormAtPEqualsM;
  if (p >= 2.0 * md) return Regime::HighP;
  return Regime::Subquadratic;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::SupNormAtPEqualsM: return "sup-norm";
    case Regime::Subquadratic: return "subquadratic";
    case Regime::HighP: return "high-p";
    case Regime::Unsupported: return "unsupported";
  }
  return "unsupported";
}

double multilinear_exponent(int m, double p) {
  require_supported(m, p);
  const double md = static_cast<double>(m);
  switch (classify_regime(m, p)) {
    case Regime::SupNormAtPEqualsM:
      return kInf;
    case Regime::HighP:
      // 2mp/(mp+p-2m), written through 1/p so p = inf gives 2m/(m+1)
      return 2.0 * md / (md + 1.0 - 2.0 * md * inv_exponent(p));
    case Regime::Subquadratic:
      return p / (p - md);
    case Regime::Unsupported:
      break;
  }
  throw std::invalid_argument("p < m is outside the supported regimes");
}

double polynomial_exponent(int m, double p) { return multilinear_exponent(m, p); }

ExponentPair bilinear_mixed_exponents(double p, double q) {
  if (!(p >= 2.0) || !(q >= 2.0)) throw std::invalid_argument("mixed exponents need p, q >= 2");
  const double s = inv_exponent(p) + inv_exponent(q);
  if (!(s < 1.0)) throw std::invalid_argument("mixed exponents need 1/p + 1/q < 1");
  return ExponentPair{2.0, 1.0 / (1.0 - s)};
}

double symmetric_exponent(double p, double q) {
  if (!(p >= 2.0) || !(q >= 2.0)) throw std::invalid_argument("symmetric exponent needs p, q >= 2");
  const double s = inv_exponent(p) + inv_exponent(q);
  if (s > 0.5) throw std::invalid_argument("symmetric exponent needs 1/p + 1/q <= 1/2");
  return 4.0 / (3.0 - 2.0 * s);
}

ExponentPair interpolate_exponent_pairs(ExponentPair a, ExponentPair b, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
  auto one = [](double ea, double eb, double t) {
    if (!(ea > 0.0) || !(eb > 0.0)) throw std::invalid_argument("exponents must be positive");
    const double inv = t * inv_exponent(ea) + (1.0 - t) * inv_exponent(eb);
    return inv == 0.0 ? kInf : 1.0 / inv;
  };
  return ExponentPair{one(a.inner, b.inner, theta), one(a.outer, b.outer, theta)};
}

double ksz_alpha(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("alpha(p) needs p >= 1");
  if (p >= 2.0) return 0.5 - inv_exponent(p);
  return 0.0;
}

double ksz_exponent(int m, std::span<const double> ps) {
  if (m < 1) throw std::invalid_argument("ksz exponent needs m >= 1");
  if (static_cast<int>(ps.size()) != m)
    throw std::invalid_argument("ksz exponent needs one p per slot");
  double e = 0.5;
  for (double p : ps) e += ksz_alpha(p);
  return e;
}

BoundMethod bound_method_from_name(const std::string& name) {
  if (name == "multilinear") return BoundMethod::Multilinear;
  if (name == "general") return BoundMethod::General;
  if (name == "harris") return BoundMethod::Harris;
  throw std::invalid_argument("unknown bound method: " + name);
}

ConstantBound constant_upper_bound(int m, double p, Field field, BoundMethod method) {
  require_supported(m, p);
  const double base = field == Field::Real
                          ? std::pow(std::sqrt(2.0), static_cast<double>(m - 1))
                          : std::pow(2.0 / std::sqrt(M_PI), static_cast<double>(m - 1));
  ConstantBound out;
  out.field = field;
  switch (method) {
    case BoundMethod::Multilinear:
      out.value = base;
      out.provenance = "multilinear";
      return out;
    case BoundMethod::General: {
      const double fact = factorial(m);
      out.value = base * std::pow(fact, static_cast<double>(m) * inv_exponent(p)) * (m_pow_m(m) / fact);
      out.provenance = p == static_cast<double>(m) ? "p-equals-m" : "lemma-factor";
      return out;
    }
    case BoundMethod::Harris: {
      if (field != Field::Complex)
        throw std::invalid_argument("the Harris polarization bound needs complex scalars");
      if (!is_power_of_two(m))
        throw std::invalid_argument("the Harris polarization bound needs m a power of 2");
      const double fact = factorial(m);
      const double exponent = std::isinf(p) ? 1.0 : std::abs(p - 2.0) / p;
      out.value = base * std::pow(fact, static_cast<double>(m) * inv_exponent(p)) *
                  std::pow(m_pow_m(m) / fact, exponent);
      out.provenance = "harris";
      return out;
    }
  }
  throw std::invalid_argument("unknown bound method");
}

}  // namespace hllab
