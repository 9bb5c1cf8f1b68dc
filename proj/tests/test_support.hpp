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

// Shared generators and independent oracles for the test suites. The
// oracles are deliberately derivative-free and implementation-agnostic:
// dense sampling plus compass-search polish, plus closed forms where a
// 2x2 eigenvalue problem suffices.

#ifndef HLLAB_TEST_SUPPORT_HPP
#define HLLAB_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "hllab/form.hpp"
#include "hllab/norms.hpp"
#include "hllab/polynomial.hpp"
#include "hllab/rng.hpp"

namespace hllab::testing {

inline HomogeneousPolynomial random_polynomial(int n, int m, Field field, Rng& rng) {
  HomogeneousPolynomial P(n, m, field);
  for (const MultiIndex& alpha : enumerate_multi_indices(n, m)) {
    const double re = rng.gaussian();
    const double im = field == Field::Complex ? rng.gaussian() : 0.0;
    P.set_coefficient(alpha, Cplx(re, im));
  }
  return P;
}

inline MultilinearForm random_form(int n, int m, Field field, Rng& rng) {
  MultilinearForm T(n, m, field);
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    const double re = rng.gaussian();
    const double im = field == Field::Complex ? rng.gaussian() : 0.0;
    T.set_entry_flat(flat, Cplx(re, im));
  }
  return T;
}

inline MultilinearForm random_symmetric_form(int n, int m, Field field, Rng& rng) {
  MultilinearForm T = random_form(n, m, field, rng);
  // average entries over sorted index classes
  MultilinearForm S(n, m, field);
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    T.unflatten(flat, idx);
    std::vector<int> sorted(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    S.set_entry_flat(flat, T.entry(sorted));
  }
  return S;
}

inline std::vector<double> random_real_point(int n, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.gaussian();
  return x;
}

inline std::vector<Cplx> random_point(int n, Field field, Rng& rng) {
  std::vector<Cplx> x(static_cast<std::size_t>(n));
  for (Cplx& v : x) {
    v = Cplx(rng.gaussian(), field == Field::Complex ? rng.gaussian() : 0.0);
  }
  return x;
}

// largest |eigenvalue| of [[a, c/2], [c/2, b]]; the exact sup norm of
// a x^2 + b y^2 + c xy on the Euclidean ball
inline double quadratic_form_norm_2d(double a, double b, double c) {
  const double tr = a + b;
  const double disc = std::sqrt((a - b) * (a - b) + c * c);
  return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
}

// point on the positive l_p quarter-circle in 2d parametrized by t in [0,1]
inline std::pair<double, double> lp_circle_point(double t, double p) {
  if (std::isinf(p)) {
    // walk the boundary of the sup-norm square (positive quadrant)
    return t <= 0.5 ? std::pair<double, double>{1.0, 2.0 * t}
                    : std::pair<double, double>{2.0 - 2.0 * t, 1.0};
  }
  const double x = t;
  const double y = std::pow(1.0 - std::pow(t, p), 1.0 / p);
  return {x, y};
}

// dense scan of |P| over the 2d l_p sphere (all sign patterns), followed
// by a golden-section style refinement; independent of any gradient logic
inline double poly_norm_oracle_2d(const HomogeneousPolynomial& P, double p,
                                  int grid = 20001) {
  auto value_at = [&](double t, double sx, double sy) {
    const auto [x, y] = lp_circle_point(t, p);
    const double pt[2] = {sx * x, sy * y};
    return std::abs(P(std::span<const double>(pt, 2)));
  };
  double best = 0.0;
  double best_t = 0.0, best_sx = 1.0, best_sy = 1.0;
  for (const double sx : {1.0, -1.0}) {
    for (const double sy : {1.0, -1.0}) {
      for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
        const double v = value_at(t, sx, sy);
        if (v > best) {
          best = v;
          best_t = t;
          best_sx = sx;
          best_sy = sy;
        }
      }
    }
  }
  double lo = std::max(0.0, best_t - 1.0 / static_cast<double>(grid - 1));
  double hi = std::min(1.0, best_t + 1.0 / static_cast<double>(grid - 1));
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (value_at(m1, best_sx, best_sy) < value_at(m2, best_sx, best_sy)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(best, value_at(0.5 * (lo + hi), best_sx, best_sy));
}

// sampling + compass-search polish over the real l_p sphere in any
// dimension; derivative-free
inline double poly_norm_oracle_sampled(const HomogeneousPolynomial& P, double p,
                                       std::uint64_t seed, int samples = 20000) {
  const int n = P.dimension();
  Rng rng(seed);
  auto objective = [&](std::vector<double> x) {
    const double nrm = lp_norm(std::span<const double>(x), p);
    for (double& v : x) v /= nrm;
    return std::abs(P(std::span<const double>(x)));
  };
  std::vector<double> best_x(static_cast<std::size_t>(n), 0.0);
  best_x[0] = 1.0;
  double best = objective(best_x);
  for (int i = 0; i < samples; ++i) {
    std::vector<double> x = random_real_point(n, rng);
    if (lp_norm(std::span<const double>(x), p) == 0.0) continue;
    const double v = objective(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double step = 0.5;
  while (step > 1e-12) {
    bool improved = false;
    for (int j = 0; j < n; ++j) {
      for (const double s : {step, -step}) {
        std::vector<double> cand = best_x;
        cand[static_cast<std::size_t>(j)] += s;
        if (lp_norm(std::span<const double>(cand), p) == 0.0) continue;
        const double v = objective(cand);
        if (v > best) {
          best = v;
          best_x = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

// dense sweep over two unit circles for bilinear forms on l_2^2 x l_2^2
inline double bilinear_norm_oracle_2d_l2(const MultilinearForm& L, int grid = 2000) {
  double best = 0.0;
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < grid; ++i) {
    const double a = 2.0 * pi * static_cast<double>(i) / grid;
    for (int j = 0; j < grid; ++j) {
      const double b = 2.0 * pi * static_cast<double>(j) / grid;
      const std::vector<std::vector<Cplx>> pts = {
          {Cplx(std::cos(a), 0.0), Cplx(std::sin(a), 0.0)},
          {Cplx(std::cos(b), 0.0), Cplx(std::sin(b), 0.0)}};
      best = std::max(best, std::abs(L(pts)));
    }
  }
  return best;
}

// exhaustive grid over the product of l_p spheres for small bilinear forms
inline double form_norm_oracle_grid(const MultilinearForm& T, double p, double q,
                                    int grid = 400) {
  const int n = T.dimension();
  if (n != 2 || T.arity() != 2) return -1.0;
  double best = 0.0;
  for (const double sx : {1.0, -1.0}) {
    for (const double sy : {1.0, -1.0}) {
      for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid - 1);
        const auto [x0, x1] = lp_circle_point(t, p);
        for (int j = 0; j < grid; ++j) {
          const double u = static_cast<double>(j) / static_cast<double>(grid - 1);
          const auto [y0, y1] = lp_circle_point(u, q);
          const std::vector<std::vector<Cplx>> pts = {
              {Cplx(x0, 0.0), Cplx(sx * x1, 0.0)},
              {Cplx(y0, 0.0), Cplx(sy * y1, 0.0)}};
          best = std::max(best, std::abs(T(pts)));
        }
      }
    }
  }
  return best;
}

}  // namespace hllab::testing

#endif
