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

#include "hllab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hllab/norms.hpp"
#include "hllab/polarization.hpp"
#include "hllab/rng.hpp"

namespace hllab {

namespace {

Cplx unit_phase(Cplx v) {
  const double a = std::abs(v);
  if (a == 0.0) return Cplx(1.0, 0.0);
  return std::conj(v) / a;
}

void normalize_lp(std::vector<Cplx>& x, double p) {
  const double nrm = lp_norm(std::span<const Cplx>(x), p);
  if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  for (Cplx& v : x) v /= nrm;
}

std::vector<Cplx> random_sphere_point(Rng& rng, int n, Field field, double p) {
  std::vector<Cplx> x(static_cast<std::size_t>(n));
  for (Cplx& v : x) {
    const double re = rng.gaussian();
    const double im = field == Field::Complex ? rng.gaussian() : 0.0;
    v = Cplx(re, im);
  }
  double nrm = lp_norm(std::span<const Cplx>(x), p);
  if (nrm == 0.0) {
    x[0] = Cplx(1.0, 0.0);
    nrm = 1.0;
  }
  for (Cplx& v : x) v /= nrm;
  return x;
}

}  // namespace

std::pair<std::vector<Cplx>, double> norming_vector(std::span<const Cplx> phi, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("norming vector needs p >= 1");
  double mx = 0.0;
  for (const Cplx& v : phi) mx = std::max(mx, std::abs(v));
  if (mx == 0.0) throw std::invalid_argument("norming vector of the zero functional is undefined");

  const std::size_t n = phi.size();
  std::vector<Cplx> x(n, Cplx(0.0, 0.0));

  if (std::isinf(p)) {
    // sign/phase vector, every coordinate active
    for (std::size_t j = 0; j < n; ++j) x[j] = unit_phase(phi[j]);
  } else if (p == 1.0) {
    // dual exponent inf: concentrate on the largest |phi_j|, lowest index
    std::size_t best = 0;
    double best_abs = std::abs(phi[0]);
    for (std::size_t j = 1; j < n; ++j) {
      const double a = std::abs(phi[j]);
      if (a > best_abs) {
        best_abs = a;
        best = j;
      }
    }
    x[best] = unit_phase(phi[best]);
  } else {
    // |x_j| proportional to |phi_j|^{p'-1}, then rescale to the sphere
    const double q = dual_exponent(p);
    for (std::size_t j = 0; j < n; ++j) {
      const double a = std::abs(phi[j]) / mx;
      if (a > 0.0) x[j] = unit_phase(phi[j]) * std::pow(a, q - 1.0);
    }
    normalize_lp(x, p);
  }

  // the pairing is real and non-negative by phase alignment
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) value += (phi[j] * x[j]).real();
  return {std::move(x), value};
}

NormEstimate form_norm_lower(const MultilinearForm& T, const BallSpec& balls,
                             const AscentOptions& opt) {
  balls.validate(T.arity());
  if (opt.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const int n = T.dimension();
  const int m = T.arity();

  NormEstimate best;
  best.method = "alternating";
  best.restarts_used = opt.restarts;
  best.seed = opt.seed;
  long total_updates = 0;

  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng(opt.seed + static_cast<std::uint64_t>(r));
    std::vector<std::vector<Cplx>> xs;
    xs.reserve(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s)
      xs.push_back(random_sphere_point(rng, n, T.field(), balls.p_values[static_cast<std::size_t>(s)]));

    std::vector<double> trace;
    trace.push_back(std::abs(T(xs)));
    bool converged = false;
    bool degenerate = false;
    double sweep_obj = trace.back();

    for (int sweep = 0; sweep < opt.max_sweeps && !degenerate; ++sweep) {
      const double prev = sweep_obj;
      for (int s = 0; s < m; ++s) {
        const std::vector<Cplx> phi = T.slot_functional(xs, s);
        if (lp_norm(std::span<const Cplx>(phi), kInf) == 0.0) {
          // the remaining slots pin T to zero along this direction
          degenerate = true;
          break;
        }
        auto [x, value] = norming_vector(phi, balls.p_values[static_cast<std::size_t>(s)]);
        xs[static_cast<std::size_t>(s)] = std::move(x);
        sweep_obj = value;
        trace.push_back(value);
        ++total_updates;
      }
      if (degenerate) break;
      if (sweep_obj - prev <= opt.rel_tol * sweep_obj) {
        converged = true;
        break;
      }
    }

    // value certified by re-evaluation at the stored witness
    const double value = std::abs(T(xs));
    if (opt.trace_sink) opt.trace_sink->push_back(trace);
    if (value > best.value || best.witness.empty()) {
      best.value = value;
      best.witness = xs;
      best.converged = converged;
      best.trace = std::move(trace);
    }
  }
  best.iterations = total_updates;
  return best;
}

double form_norm_upper(const MultilinearForm& T, const BallSpec& balls) {
  balls.validate(T.arity());
  const int n = T.dimension();
  const int m = T.arity();
  // peel slots from the last one so row-major blocks stay contiguous:
  // level m-1 reduces each length-n row by the dual norm of slot m-1,
  // then level m-2, and so on
  std::vector<double> current(T.entry_count());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = std::abs(T.entries()[i]);
  for (int s = m - 1; s >= 0; --s) {
    const double q = dual_exponent(balls.p_values[static_cast<std::size_t>(s)]);
    const std::size_t groups = current.size() / static_cast<std::size_t>(n);
    std::vector<double> next(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      next[g] = lp_aggregate(
          std::span<const double>(current.data() + g * static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(n)),
          q);
    }
    current = std::move(next);
  }
  return current[0];
}

namespace {

// real inner product of complex vectors read as 2n real coordinates
double real_dot(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (std::conj(a[i]) * b[i]).real();
  return s;
}

// scale-invariant objective |P(x)| with x kept on the unit sphere
struct PolyAscent {
  const HomogeneousPolynomial& P;
  double p;

  double objective(const std::vector<Cplx>& x) const {
    return std::abs(P(std::span<const Cplx>(x)));
  }

  // gradient of the l_p norm at a sphere point: n_j = phase(x_j)|x_j|^{p-1}
  std::vector<Cplx> sphere_normal(const std::vector<Cplx>& x) const {
    std::vector<Cplx> n(x.size(), Cplx(0.0, 0.0));
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double a = std::abs(x[j]);
      if (a > 0.0) n[j] = (x[j] / a) * std::pow(a, p - 1.0);
    }
    return n;
  }

  // ascent direction: the ambient gradient of the scale-invariant ratio
  // |P(x)|^2 / ||x||_p^{2m} evaluated on the sphere. The raw gradient of a
  // homogeneous polynomial is largely radial (Euler identity) and a radial
  // step dies in the rescaling projection; subtracting m|P|^2 times the
  // norm gradient leaves exactly the part that moves the ratio.
  std::vector<Cplx> direction(const std::vector<Cplx>& x) const {
    const Cplx value = P(std::span<const Cplx>(x));
    std::vector<Cplx> grad = P.gradient(std::span<const Cplx>(x));
    for (Cplx& g : grad) g = std::conj(std::conj(value) * g);
    const std::vector<Cplx> normal = sphere_normal(x);
    const double coef = static_cast<double>(P.degree()) * std::norm(value);
    for (std::size_t j = 0; j < grad.size(); ++j) grad[j] -= coef * normal[j];
    return grad;
  }
};

// --- sup-norm ball: cyclic coordinate maximization over the cube/polydisc ---

// coefficients of the univariate slice t -> P(..., t at slot j, ...)
std::vector<Cplx> univariate_slice(const HomogeneousPolynomial& P,
                                   const std::vector<Cplx>& x, int j) {
  std::vector<Cplx> c(static_cast<std::size_t>(P.degree()) + 1, Cplx(0.0, 0.0));
  for (const auto& [alpha, a] : P.coefficients()) {
    Cplx term = a;
    for (int i = 0; i < P.dimension(); ++i) {
      if (i == j) continue;
      for (int e = 0; e < alpha[i]; ++e) term *= x[static_cast<std::size_t>(i)];
    }
    c[static_cast<std::size_t>(alpha[j])] += term;
  }
  return c;
}

double abs_univariate(const std::vector<Cplx>& c, Cplx t) {
  Cplx v(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
  return std::abs(v);
}

// refine a bracket around a grid maximum of a 1-d function by ternary search
template <typename Fn>
double refine_max(Fn&& f, double lo, double hi, int iterations = 80) {
  for (int it = 0; it < iterations; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

// best coordinate value on [-1, 1] (real) or the unit circle (complex);
// the polydisc maximum sits on the circle by the maximum modulus principle
std::pair<Cplx, double> maximize_coordinate(const std::vector<Cplx>& c, bool complex_field) {
  constexpr int kGrid = 512;
  if (complex_field) {
    auto value = [&](double theta) {
      return abs_univariate(c, Cplx(std::cos(theta), std::sin(theta)));
    };
    const double two_pi = 6.283185307179586476925286766559;
    double best_theta = 0.0, best = value(0.0);
    for (int i = 1; i < kGrid; ++i) {
      const double theta = two_pi * static_cast<double>(i) / kGrid;
      const double v = value(theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
    }
    const double h = two_pi / kGrid;
    const double theta = refine_max(value, best_theta - h, best_theta + h);
    const Cplx t(std::cos(theta), std::sin(theta));
    return {t, abs_univariate(c, t)};
  }
  auto value = [&](double t) { return abs_univariate(c, Cplx(t, 0.0)); };
  double best_t = -1.0, best = value(-1.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double t = -1.0 + 2.0 * static_cast<double>(i) / kGrid;
    const double v = value(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  const double h = 2.0 / kGrid;
  const double t = refine_max(value, std::max(-1.0, best_t - h), std::min(1.0, best_t + h));
  const double refined = value(t);
  if (refined > best) return {Cplx(t, 0.0), refined};
  return {Cplx(best_t, 0.0), best};
}

// one restart of the sup-norm maximizer; monotone by construction
double cube_ascent(const HomogeneousPolynomial& P, std::vector<Cplx>& x,
                   const AscentOptions& opt, std::vector<double>& trace,
                   long& iterations, bool& converged) {
  const int n = P.dimension();
  const bool complex_field = P.field() == Field::Complex;
  double f = std::abs(P(std::span<const Cplx>(x)));
  trace.push_back(f);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    const double prev = f;
    for (int j = 0; j < n; ++j) {
      ++iterations;
      const std::vector<Cplx> c = univariate_slice(P, x, j);
      double scale = 0.0;
      for (const Cplx& v : c) scale = std::max(scale, std::abs(v));
      if (scale == 0.0) continue;
      const auto [t, value] = maximize_coordinate(c, complex_field);
      if (value > f) {
        x[static_cast<std::size_t>(j)] = t;
        f = value;
        trace.push_back(f);
      }
    }
    if (f - prev <= opt.rel_tol * f) {
      converged = true;
      break;
    }
  }
  return f;
}

}  // namespace

NormEstimate poly_norm_lower(const HomogeneousPolynomial& P, double p,
                             const AscentOptions& opt) {
  if (!(p >= 1.0)) throw std::invalid_argument("poly_norm_lower needs p >= 1");
  if (opt.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const int n = P.dimension();
  const PolyAscent problem{P, p};
  const bool real_field = P.field() == Field::Real;

  NormEstimate best;
  best.method = "projected-gradient";
  best.restarts_used = opt.restarts;
  best.seed = opt.seed;
  long total_iterations = 0;

  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng(opt.seed + static_cast<std::uint64_t>(r));
    std::vector<Cplx> x = random_sphere_point(rng, n, P.field(), p);
    bool converged = false;

    if (std::isinf(p)) {
      std::vector<double> trace;
      cube_ascent(P, x, opt, trace, total_iterations, converged);
      // pull the witness onto the sphere; homogeneity can only raise |P|
      const double nrm = lp_norm(std::span<const Cplx>(x), kInf);
      if (nrm > 0.0) {
        for (Cplx& v : x) v /= nrm;
      }
      const double value = problem.objective(x);
      if (!trace.empty() && value > trace.back()) trace.push_back(value);
      if (opt.trace_sink) opt.trace_sink->push_back(trace);
      if (value > best.value || best.witness.empty()) {
        best.value = value;
        best.witness.assign(1, x);
        best.converged = converged;
        best.trace = std::move(trace);
      }
      continue;
    }

    double f = problem.objective(x);
    std::vector<double> trace{f};
    double step = 1.0;

    for (int iter = 0; iter < opt.max_iterations; ++iter) {
      ++total_iterations;
      std::vector<Cplx> dir = problem.direction(x);
      if (real_field) {
        for (Cplx& d : dir) d = Cplx(d.real(), 0.0);
      }
      const double dn = lp_norm(std::span<const Cplx>(dir), 2.0);
      if (dn == 0.0) {
        converged = f > 0.0;
        break;
      }
      std::vector<Cplx> cand(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] + (step / dn) * dir[i];
      const double cn = lp_norm(std::span<const Cplx>(cand), p);
      if (cn == 0.0) {
        step *= 0.5;
      } else {
        for (Cplx& v : cand) v /= cn;
        const double fc = problem.objective(cand);
        if (fc > f) {
          x = std::move(cand);
          f = fc;
          trace.push_back(f);
        } else {
          step *= 0.5;
        }
      }
      if (step < opt.min_step) {
        converged = true;
        break;
      }
    }

    // witness pinned to the sphere, value re-derived from it
    const double nrm = lp_norm(std::span<const Cplx>(x), p);
    if (nrm > 0.0) {
      for (Cplx& v : x) v /= nrm;
    }
    const double value = problem.objective(x);
    if (opt.trace_sink) opt.trace_sink->push_back(trace);
    if (value > best.value || best.witness.empty()) {
      best.value = value;
      best.witness.assign(1, x);
      best.converged = converged;
      best.trace = std::move(trace);
    }
  }
  best.iterations = total_iterations;
  return best;
}

Bracket poly_norm_bracket(const HomogeneousPolynomial& P, double p,
                          const AscentOptions& opt) {
  Bracket b;
  b.lower = poly_norm_lower(P, p, opt).value;
  b.upper = form_norm_upper(polarize(P), BallSpec::uniform(p, P.degree()));
  return b;
}

}  // namespace hllab
