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

// Experiment registry: one entry per named experiment the runner knows.
// Every cell seed derives deterministically from the config seed and the
// cell coordinates, so sub-grids reproduce the cells of a full grid.

#include <algorithm>
#include <cmath>

#include "hllab/certificates.hpp"
#include "hllab/norms.hpp"
#include "hllab/polarization.hpp"
#include "hllab/rng.hpp"
#include "hllab/runner.hpp"
#include "hllab/serialization.hpp"

namespace hllab {

namespace {

using nlohmann::json;

void add_check(RunContext& ctx, std::string name, bool pass, double value,
               double target, std::string detail = "") {
  ctx.checks.push_back(CheckResult{std::move(name), pass, value, target, std::move(detail)});
}

MultilinearForm random_gaussian_form(int m, int n, Field field, std::uint64_t seed) {
  MultilinearForm T(n, m, field);
  Rng rng(seed);
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    const double re = rng.gaussian();
    const double im = field == Field::Complex ? rng.gaussian() : 0.0;
    T.set_entry_flat(flat, Cplx(re, im));
  }
  return T;
}

HomogeneousPolynomial object_polynomial(const json& spec) {
  if (spec.is_string()) {
    if (spec.get<std::string>() == "x1x2") return monomial_x1x2();
    throw SchemaError("unknown builtin polynomial '" + spec.get<std::string>() + "'");
  }
  if (spec.is_object()) {
    try {
      return polynomial_from_json(spec);
    } catch (const std::exception& e) {
      throw SchemaError(std::string("bad inline polynomial: ") + e.what());
    }
  }
  throw SchemaError("'polynomial' must be a builtin name or an inline object");
}

Field field_param(const ExperimentConfig& cfg, const char* name) {
  try {
    return field_from_name(param_str(cfg, name));
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
}

// ---------------------------------------------------------------- exponent-table

Table run_exponent_table(const ExperimentConfig& cfg, RunContext& ctx) {
  const std::vector<int> ms = param_int_list(cfg, "m_values");
  const std::vector<double> pvs = param_num_list(cfg, "p_values");
  Table t({"m", "p", "regime", "multilinear_exp", "polynomial_exp", "constant_real",
           "constant_complex"});
  for (int m : ms) {
    if (m < 2) throw SchemaError("m_values entries must be >= 2");
    for (double p : pvs) {
      const Regime reg = classify_regime(m, p);
      if (reg == Regime::Unsupported) {
        t.add_row({static_cast<std::int64_t>(m), p, std::string(regime_name(reg)),
                   std::string(), std::string(), std::string(), std::string()});
      } else {
        t.add_row({static_cast<std::int64_t>(m), p, std::string(regime_name(reg)),
                   multilinear_exponent(m, p), polynomial_exponent(m, p),
                   constant_upper_bound(m, p, Field::Real, BoundMethod::General).value,
                   constant_upper_bound(m, p, Field::Complex, BoundMethod::General).value});
      }
      ctx.row_seeds.push_back(0);
    }
  }
  for (int m : ms) {
    // both branch formulas written out at the regime boundary p = 2m
    const double md = static_cast<double>(m);
    const double p2 = 2.0 * md;
    const double high = 2.0 * md * p2 / (md * p2 + p2 - 2.0 * md);
    const double sub = p2 / (p2 - md);
    const double gap = std::max(std::abs(high - 2.0), std::abs(sub - 2.0));
    add_check(ctx, "branch-agreement-m" + std::to_string(m), gap == 0.0, gap, 0.0);
  }
  const double littlewood = multilinear_exponent(2, kInf);
  add_check(ctx, "littlewood-4-3", littlewood == 4.0 / 3.0, littlewood, 4.0 / 3.0);
  return t;
}

// ---------------------------------------------------------------- norm

Table run_norm(const ExperimentConfig& cfg, RunContext& ctx) {
  const json& obj = param_json(cfg, "object");
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (restarts < 1) throw SchemaError("restarts must be >= 1");
  AscentOptions opt;
  opt.restarts = restarts;
  opt.seed = cfg.seed;

  Table t({"kind", "n", "m", "field", "balls", "lower", "upper", "converged", "iterations",
           "certificate_rel_err"});

  const bool is_poly = obj.is_string() || (obj.is_object() && obj.contains("coeffs"));
  NormEstimate est;
  double upper = 0.0;
  std::string balls_label;
  std::string kind;
  int n = 0, m = 0;
  Field field = Field::Real;
  double cert = 0.0;

  if (is_poly) {
    const HomogeneousPolynomial P = object_polynomial(obj);
    const double p = param_num(cfg, "p");
    if (!(p >= 1.0)) throw SchemaError("'p' must satisfy p >= 1");
    est = poly_norm_lower(P, p, opt);
    upper = form_norm_upper(polarize(P), BallSpec::uniform(p, P.degree()));
    balls_label = format_double(p);
    kind = "polynomial";
    n = P.dimension();
    m = P.degree();
    field = P.field();
    const double revalue = std::abs(P(std::span<const Cplx>(est.witness.at(0))));
    cert = std::abs(revalue - est.value) / std::max(est.value, 1e-300);
  } else {
    MultilinearForm T = [&] {
      try {
        return form_from_json(obj);
      } catch (const std::exception& e) {
        throw SchemaError(std::string("bad inline form: ") + e.what());
      }
    }();
    std::vector<double> ps = param_num_list(cfg, "ps");
    if (ps.empty()) ps.assign(static_cast<std::size_t>(T.arity()), param_num(cfg, "p"));
    const BallSpec balls{ps};
    balls.validate(T.arity());
    est = form_norm_lower(T, balls, opt);
    upper = form_norm_upper(T, balls);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) balls_label += ",";
      balls_label += format_double(ps[i]);
    }
    kind = "form";
    n = T.dimension();
    m = T.arity();
    field = T.field();
    const double revalue = std::abs(T(est.witness));
    cert = std::abs(revalue - est.value) / std::max(est.value, 1e-300);
  }

  t.add_row({kind, static_cast<std::int64_t>(n), static_cast<std::int64_t>(m),
             std::string(field_name(field)), balls_label, est.value, upper, est.converged,
             static_cast<std::int64_t>(est.iterations), cert});
  ctx.row_seeds.push_back(cfg.seed);
  add_check(ctx, "certificate", cert <= Tolerances::certificate_rel, cert,
            Tolerances::certificate_rel);
  add_check(ctx, "sandwich", est.value <= upper + 1e-12, est.value, upper);
  ctx.extra["estimate"] = to_json(est);
  return t;
}

// ---------------------------------------------------------------- verify-inequality

Table run_verify_inequality(const ExperimentConfig& cfg, RunContext& ctx) {
  const long count = param_int(cfg, "count");
  const int m = static_cast<int>(param_int(cfg, "m"));
  const int n = static_cast<int>(param_int(cfg, "n"));
  const double p = param_num(cfg, "p");
  const Field field = field_param(cfg, "field");
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (count < 1 || m < 2 || n < 1 || restarts < 1)
    throw SchemaError("count, n, restarts must be >= 1 and m >= 2");
  if (classify_regime(m, p) == Regime::Unsupported)
    throw SchemaError("p < m is outside the supported regimes");

  double exponent = param_num_any(cfg, "exponent");
  if (exponent == 0.0) exponent = multilinear_exponent(m, p);
  double constant = param_num_any(cfg, "constant");
  if (constant == 0.0)
    constant = constant_upper_bound(m, p, field, BoundMethod::Multilinear).value;

  const BallSpec balls = BallSpec::uniform(p, m);
  Table t({"index", "seed", "lhs", "rhs_lower", "rhs_upper", "conclusive", "violation"});
  long conclusive_count = 0;
  long violations = 0;
  for (long i = 0; i < count; ++i) {
    const std::uint64_t cell = derive_seed(cfg.seed, {static_cast<std::uint64_t>(i)});
    const MultilinearForm T = random_gaussian_form(m, n, field, cell);
    const double lhs = coeff_norm(T, exponent);
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = derive_seed(cell, {1});
    const double lower = form_norm_lower(T, balls, opt).value;
    const double upper = form_norm_upper(T, balls);
    const bool conclusive = lhs <= constant * lower;
    const bool violation = lhs > constant * upper * (1.0 + 1e-12);
    conclusive_count += conclusive;
    violations += violation;
    t.add_row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(cell), lhs,
               constant * lower, constant * upper, conclusive, violation});
    ctx.row_seeds.push_back(cell);
  }
  const double fraction = static_cast<double>(conclusive_count) / static_cast<double>(count);
  const double min_conclusive = param_num_any(cfg, "min_conclusive");
  add_check(ctx, "conclusive-fraction", fraction >= min_conclusive, fraction, min_conclusive);
  add_check(ctx, "rigorous-violations", violations == 0, static_cast<double>(violations), 0.0);
  ctx.extra["exponent"] = exponent;
  ctx.extra["constant"] = constant;
  return t;
}

// ---------------------------------------------------------------- search-constant

Table run_search_constant(const ExperimentConfig& cfg, RunContext& ctx) {
  const int m = static_cast<int>(param_int(cfg, "m"));
  const int n = static_cast<int>(param_int(cfg, "n"));
  const double p = param_num(cfg, "p");
  const Field field = field_param(cfg, "field");
  const double exponent = param_num(cfg, "exponent");
  const long budget = param_int(cfg, "budget");
  if (m < 1 || n < 1 || budget < 1) throw SchemaError("m, n, budget must be >= 1");
  if (!(p >= 1.0)) throw SchemaError("'p' must satisfy p >= 1");

  const RatioSearchResult res = search_constant_lower(m, n, p, field, exponent, budget, cfg.seed);
  AscentOptions repro_opt;
  repro_opt.restarts = 32;
  repro_opt.seed = derive_seed(cfg.seed, {0xBEEFULL});
  const double reproduced = ratio(res.best_object, p, exponent, repro_opt);

  Table t({"m", "n", "p", "field", "exponent", "budget", "evaluations", "best_ratio",
           "reproduced_ratio"});
  t.add_row({static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), p,
             std::string(field_name(field)), exponent, static_cast<std::int64_t>(budget),
             static_cast<std::int64_t>(res.evaluations), res.best_ratio, reproduced});
  ctx.row_seeds.push_back(cfg.seed);

  const double rep_err = std::abs(reproduced - res.best_ratio) / std::max(res.best_ratio, 1e-300);
  add_check(ctx, "reproducible", rep_err <= Tolerances::ratio_reproducibility, rep_err,
            Tolerances::ratio_reproducibility);
  const double expect = param_num_any(cfg, "expect_at_least");
  if (expect > 0.0)
    add_check(ctx, "constant-at-least", res.best_ratio >= expect, res.best_ratio, expect);
  ctx.extra["best_object"] = to_json(res.best_object);
  return t;
}

// ---------------------------------------------------------------- choi-kim-scan

Table run_choi_kim_scan(const ExperimentConfig& cfg, RunContext& ctx) {
  const double step = param_num(cfg, "c_step");
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (!(step > 0.0) || step > 1.0) throw SchemaError("c_step must lie in (0, 1]");
  if (restarts < 1) throw SchemaError("restarts must be >= 1");

  Table t({"family", "c", "sign", "max_coeff", "norm", "ratio"});
  double sup_ratio = 0.0;

  auto scan_one = [&](const std::string& family, double c, int sign,
                      const HomogeneousPolynomial& P, std::uint64_t seed) {
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    const double norm = poly_norm_lower(P, 2.0, opt).value;
    const double max_coeff = coeff_norm(P, kInf);
    const double r = max_coeff / norm;
    sup_ratio = std::max(sup_ratio, r);
    t.add_row({family, c, static_cast<std::int64_t>(sign), max_coeff, norm, r});
    ctx.row_seeds.push_back(seed);
  };

  const long k_max = std::lround(2.0 / step);
  for (const int sign : {1, -1}) {
    for (long k = -k_max; k <= k_max; ++k) {
      const double c = std::clamp(static_cast<double>(k) * step, -2.0, 2.0);
      const std::uint64_t seed = derive_seed(
          cfg.seed, {static_cast<std::uint64_t>(sign + 10), static_cast<std::uint64_t>(k + k_max)});
      scan_one("extreme-ii", c, sign, choi_kim_family(c, sign), seed);
    }
  }
  if (param_bool(cfg, "include_case_i")) {
    // the parametrized family excludes c = 0 with b = a; add the four
    // diagonal extreme points explicitly
    int label = 0;
    for (const double a : {1.0, -1.0}) {
      for (const double b : {1.0, -1.0}) {
        HomogeneousPolynomial P(2, 2, Field::Real);
        P.set_coefficient(MultiIndex({2, 0}), Cplx(a, 0.0));
        P.set_coefficient(MultiIndex({0, 2}), Cplx(b, 0.0));
        const std::uint64_t seed = derive_seed(cfg.seed, {42, static_cast<std::uint64_t>(label++)});
        scan_one("extreme-i", 0.0, a * b > 0 ? 1 : -1, P, seed);
      }
    }
  }

  const double tol = param_num(cfg, "ceiling_tol");
  add_check(ctx, "ceiling", std::abs(sup_ratio - 2.0) <= tol, sup_ratio, 2.0);
  return t;
}

// ---------------------------------------------------------------- diagonal-sharpness

Table run_diagonal_sharpness(const ExperimentConfig& cfg, RunContext& ctx) {
  const auto pairs = param_pair_list(cfg, "pq_pairs");
  const std::vector<int> ns = param_int_list(cfg, "n_values");
  const double factor = param_num(cfg, "test_exponent_factor");
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (pairs.empty() || ns.size() < 3) throw SchemaError("need pq pairs and at least 3 sizes");
  if (!(factor > 0.0 && factor < 1.0))
    throw SchemaError("test_exponent_factor must lie in (0, 1)");
  const double norm_tol = param_num(cfg, "norm_rel_tol");
  const double band = param_num(cfg, "slope_band");

  Table t({"p", "q", "n", "seed", "lambda", "norm_lower", "closed_form", "rel_err", "test_r",
           "ratio_r", "slope", "slope_target", "pass"});

  for (const auto& [p, q] : pairs) {
    const double s = inv_exponent(p) + inv_exponent(q);
    if (!(s < 1.0)) throw SchemaError("pq_pairs must satisfy 1/p + 1/q < 1");
    const double lambda = 1.0 / (1.0 - s);
    const double r = factor * lambda;

    std::vector<double> sizes, ratios;
    std::vector<std::vector<Cell>> pending;
    double worst_rel = 0.0;
    for (int n : ns) {
      if (n < 1) throw SchemaError("n_values must be >= 1");
      const std::uint64_t seed =
          derive_seed(cfg.seed, {seed_coord(p), seed_coord(q), static_cast<std::uint64_t>(n)});
      AscentOptions opt;
      opt.restarts = restarts;
      opt.seed = seed;
      const MultilinearForm A = diagonal_form(n);
      const double lower = form_norm_lower(A, BallSpec{{p, q}}, opt).value;
      const double closed = diagonal_norm_exact(n, p, q);
      const double rel = std::abs(lower - closed) / closed;
      worst_rel = std::max(worst_rel, rel);
      const double ratio_r = coeff_norm(A, r) / lower;
      sizes.push_back(static_cast<double>(n));
      ratios.push_back(ratio_r);
      pending.push_back({p, q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(seed),
                         lambda, lower, closed, rel, r, ratio_r});
      ctx.row_seeds.push_back(seed);
    }
    const GrowthFit fit = fit_growth(sizes, ratios);
    const double target = 1.0 / r - 1.0 / lambda;
    const bool pair_pass = std::abs(fit.slope - target) <= band && worst_rel <= norm_tol;
    for (auto& row : pending) {
      row.push_back(fit.slope);
      row.push_back(target);
      row.push_back(pair_pass);
      t.add_row(std::move(row));
    }
    const std::string tag = format_double(p) + "x" + format_double(q);
    add_check(ctx, "norm-match-" + tag, worst_rel <= norm_tol, worst_rel, norm_tol);
    add_check(ctx, "ratio-slope-" + tag, std::abs(fit.slope - target) <= band, fit.slope, target);
  }
  return t;
}

// ---------------------------------------------------------------- ksz-sharpness

Table run_ksz_sharpness(const ExperimentConfig& cfg, RunContext& ctx) {
  const int m = static_cast<int>(param_int(cfg, "m"));
  const std::vector<double> ps = param_num_list(cfg, "ps");
  const std::vector<int> sizes = param_int_list(cfg, "Ns");
  const int seeds_per_size = static_cast<int>(param_int(cfg, "seeds_per_size"));
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (m < 1 || seeds_per_size < 1 || restarts < 1)
    throw SchemaError("m, seeds_per_size, restarts must be >= 1");
  if (static_cast<int>(ps.size()) != m) throw SchemaError("'ps' needs one exponent per slot");
  for (double p : ps) {
    if (!(p >= 1.0)) throw SchemaError("'ps' entries must satisfy p >= 1");
  }
  if (sizes.size() < 3) throw SchemaError("'Ns' needs at least 3 sizes");

  const BallSpec balls{ps};
  SharpnessOptions sopt;
  sopt.seeds_per_size = seeds_per_size;
  sopt.ascent.restarts = restarts;
  std::vector<SharpnessCell> cells;
  sopt.cells_sink = &cells;

  // mixed coefficient norm column only for bilinear grids with a defined
  // outer exponent lambda
  double mixed_outer = 0.0;
  if (m == 2 && ps[0] >= 2.0 && ps[1] >= 2.0 &&
      inv_exponent(ps[0]) + inv_exponent(ps[1]) < 1.0) {
    mixed_outer = bilinear_mixed_exponents(ps[0], ps[1]).outer;
  }
  const ExponentPair pair{2.0, mixed_outer > 0.0 ? mixed_outer : 2.0};
  const SharpnessReport report = sharpness_experiment(m, balls, pair, sizes, cfg.seed, sopt);

  const double target = report.theoretical_target;
  double smin = param_num_any(cfg, "slope_min");
  double smax = param_num_any(cfg, "slope_max");
  if (smin == 0.0 && smax == 0.0) {
    bool all_inf = true;
    for (double p : ps) all_inf = all_inf && std::isinf(p);
    if (m == 2 && all_inf) {
      smin = 1.40;
      smax = 1.65;
    } else {
      const double band = param_num(cfg, "slope_band");
      smin = target - band;
      smax = target + band;
    }
  }
  const bool slope_ok = report.slope >= smin && report.slope <= smax;

  Table t({"N", "rep", "seed", "norm_lower", "mixed_lhs", "mixed_closed_form", "slope",
           "slope_target", "implied_s", "pass"});
  double worst_mixed_rel = 0.0;
  for (const SharpnessCell& cell : cells) {
    double mixed_lhs = std::nan("");
    double mixed_closed = std::nan("");
    if (mixed_outer > 0.0) {
      const MultilinearForm A = ksz_random_form(m, cell.size, cell.seed);
      mixed_lhs = mixed_norm_bilinear(A, 2.0, mixed_outer);
      mixed_closed = std::pow(static_cast<double>(cell.size), 0.5 + 1.0 / mixed_outer);
      worst_mixed_rel =
          std::max(worst_mixed_rel, std::abs(mixed_lhs - mixed_closed) / mixed_closed);
    }
    t.add_row({static_cast<std::int64_t>(cell.size), static_cast<std::int64_t>(cell.rep),
               static_cast<std::int64_t>(cell.seed), cell.norm_lower, mixed_lhs, mixed_closed,
               report.slope, target, report.implied_bound, slope_ok});
    ctx.row_seeds.push_back(cell.seed);
  }

  add_check(ctx, "slope-in-band", slope_ok, report.slope, target,
            "band [" + format_double(smin) + ", " + format_double(smax) + "]");
  if (mixed_outer > 0.0) {
    add_check(ctx, "mixed-closed-form", worst_mixed_rel <= 1e-9, worst_mixed_rel, 0.0);
  }
  ctx.extra = json{{"slope", report.slope},
                   {"intercept", report.intercept},
                   {"residual", report.residual},
                   {"implied_s", report.implied_bound},
                   {"theoretical_target", target},
                   {"medians", report.observed}};
  return t;
}

// ---------------------------------------------------------------- limit-trace

Table run_limit_trace(const ExperimentConfig& cfg, RunContext& ctx) {
  const json& spec = param_json(cfg, "polynomial");
  const HomogeneousPolynomial P = object_polynomial(spec);
  const std::vector<double> pvs = param_num_list(cfg, "p_values");
  const double exponent = param_num(cfg, "exponent");
  const int restarts = static_cast<int>(param_int(cfg, "restarts"));
  if (restarts < 1) throw SchemaError("restarts must be >= 1");

  const double md = static_cast<double>(P.degree());
  for (std::size_t i = 0; i < pvs.size(); ++i) {
    if (!(pvs[i] > md) || !(pvs[i] < 2.0 * md))
      throw SchemaError("p_values must lie strictly between m and 2m");
    if (i > 0 && !(pvs[i] < pvs[i - 1]))
      throw SchemaError("p_values must decrease strictly");
  }

  AscentOptions opt;
  opt.restarts = restarts;
  opt.seed = derive_seed(cfg.seed, {7});
  const std::vector<double> ratios = limit_trace_p_to_m(P, pvs, exponent, opt);

  const bool have_reference = spec.is_string() && spec.get<std::string>() == "x1x2" &&
                              std::isinf(exponent);
  Table t({"p", "ratio", "closed_form", "abs_err"});
  double worst = 0.0;
  for (std::size_t i = 0; i < pvs.size(); ++i) {
    double closed = std::nan("");
    double err = std::nan("");
    if (have_reference) {
      closed = std::pow(2.0, 2.0 / pvs[i]);
      err = std::abs(ratios[i] - closed);
      worst = std::max(worst, err);
    }
    t.add_row({pvs[i], ratios[i], closed, err});
    ctx.row_seeds.push_back(opt.seed);
  }
  if (have_reference) {
    const double tol = param_num(cfg, "match_tol");
    add_check(ctx, "closed-form-match", worst <= tol, worst, tol);
  }
  return t;
}

// ---------------------------------------------------------------- interchange-check

Table run_interchange_check(const ExperimentConfig& cfg, RunContext& ctx) {
  const long count = param_int(cfg, "count");
  const int n = static_cast<int>(param_int(cfg, "n"));
  const double lambda = param_num(cfg, "lambda");
  if (count < 1 || n < 1) throw SchemaError("count and n must be >= 1");
  if (!(lambda > 0.0) || lambda > 2.0) throw SchemaError("lambda must lie in (0, 2]");

  Table t({"index", "seed", "lhs", "rhs", "holds"});
  long failures = 0;
  for (long i = 0; i < count; ++i) {
    const std::uint64_t seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(i)});
    const MultilinearForm A = random_gaussian_form(2, n, Field::Real, seed);
    const InterchangeResult res = minkowski_interchange_check(A, lambda);
    failures += !res.holds;
    t.add_row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(seed), res.lhs, res.rhs,
               res.holds});
    ctx.row_seeds.push_back(seed);
  }
  add_check(ctx, "no-failures", failures == 0, static_cast<double>(failures), 0.0);
  return t;
}

// ---------------------------------------------------------------- interpolation-check

Table run_interpolation_check(const ExperimentConfig& cfg, RunContext& ctx) {
  const std::vector<double> pvs = param_num_list(cfg, "p_values");
  const std::vector<double> qvs = param_num_list(cfg, "q_values");
  const double theta = param_num(cfg, "theta");
  if (!(theta > 0.0) || theta > 1.0) throw SchemaError("theta must lie in (0, 1]");
  const double tol = param_num(cfg, "identity_tol");
  const bool midpoint = theta == 0.5;

  Table t({"p", "q", "lambda", "mu_inner", "mu_outer", "symmetric_exp", "abs_diff",
           "within_bracket"});
  double worst = 0.0;
  long grid_points = 0;
  bool bracket_ok = true;
  for (double p : pvs) {
    for (double q : qvs) {
      if (!(p >= 2.0) || !(q >= 2.0)) throw SchemaError("grid exponents must satisfy p, q >= 2");
      if (inv_exponent(p) + inv_exponent(q) > 0.5) continue;
      ++grid_points;
      const ExponentPair mixed = bilinear_mixed_exponents(p, q);
      const double lambda = mixed.outer;
      const ExponentPair mu = interpolate_exponent_pairs(ExponentPair{2.0, lambda},
                                                         ExponentPair{lambda, 2.0}, theta);
      const double sym = symmetric_exponent(p, q);
      double diff = std::nan("");
      if (midpoint) {
        diff = std::max(std::abs(mu.inner - sym), std::abs(mu.outer - sym));
        worst = std::max(worst, diff);
      }
      const double lo = std::min(2.0, lambda), hi = std::max(2.0, lambda);
      const bool within = mu.inner >= lo - tol && mu.inner <= hi + tol &&
                          mu.outer >= lo - tol && mu.outer <= hi + tol;
      bracket_ok = bracket_ok && within;
      t.add_row({p, q, lambda, mu.inner, mu.outer, sym, diff, within});
      ctx.row_seeds.push_back(0);
    }
  }
  if (grid_points == 0) throw SchemaError("grid has no points with 1/p + 1/q <= 1/2");
  if (midpoint) add_check(ctx, "interpolation-identity", worst <= tol, worst, tol);
  add_check(ctx, "intermediate-value", bracket_ok, bracket_ok ? 1.0 : 0.0, 1.0);
  ctx.extra["grid_points"] = grid_points;
  return t;
}

json inf_json() { return json("inf"); }

}  // namespace

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> registry = [] {
    std::vector<ExperimentInfo> r;

    r.push_back(ExperimentInfo{
        "exponent-table",
        "dump exponent and constant-bound values over an (m, p) grid to CSV",
        {{"m_values", ParamKind::IntList, json::array({2, 3, 4}), false},
         {"p_values", ParamKind::NumList,
          json::array({2, 2.5, 3, 3.5, 4, 5, 6, 8, 12, 16, 32, "inf"}), false}},
        run_exponent_table});

    r.push_back(ExperimentInfo{
        "norm",
        "lower/upper norm bracket of a polynomial or form on l_p balls",
        {{"object", ParamKind::Json, json("x1x2"), false},
         {"p", ParamKind::Num, json(2.0), false},
         {"ps", ParamKind::NumList, json::array(), false},
         {"restarts", ParamKind::Int, json(32), false}},
        run_norm});

    r.push_back(ExperimentInfo{
        "verify-inequality",
        "check the coefficient-norm inequality on random forms (0 = derive "
        "exponent/constant from m, p)",
        {{"count", ParamKind::Int, json(200), false},
         {"m", ParamKind::Int, json(2), false},
         {"n", ParamKind::Int, json(8), false},
         {"p", ParamKind::Num, json(3.0), false},
         {"field", ParamKind::Str, json("real"), false},
         {"restarts", ParamKind::Int, json(32), false},
         {"exponent", ParamKind::Num, json(0), false},
         {"constant", ParamKind::Num, json(0), false},
         {"min_conclusive", ParamKind::Num, json(0.95), true}},
        run_verify_inequality});

    r.push_back(ExperimentInfo{
        "search-constant",
        "search coefficient space for a lower bound on the optimal constant",
        {{"m", ParamKind::Int, json(2), false},
         {"n", ParamKind::Int, json(2), false},
         {"p", ParamKind::Num, json(2.0), false},
         {"field", ParamKind::Str, json("real"), false},
         {"exponent", ParamKind::Num, inf_json(), false},
         {"budget", ParamKind::Int, json(10000), false},
         {"expect_at_least", ParamKind::Num, json(0), true}},
        run_search_constant});

    r.push_back(ExperimentInfo{
        "choi-kim-scan",
        "scan the extreme polynomials of the Euclidean unit ball for the "
        "optimal constant",
        {{"c_step", ParamKind::Num, json(0.001), false},
         {"restarts", ParamKind::Int, json(8), false},
         {"include_case_i", ParamKind::Bool, json(true), false},
         {"ceiling_tol", ParamKind::Num, json(1e-4), true}},
        run_choi_kim_scan});

    r.push_back(ExperimentInfo{
        "diagonal-sharpness",
        "diagonal forms: measured norms against n^(1/lambda) and ratio growth "
        "slopes",
        {{"pq_pairs", ParamKind::PairList,
          json::array({json::array({4, 4}), json::array({3, 3}), json::array({6, 3})}), false},
         {"n_values", ParamKind::IntList, json::array({2, 4, 8, 16, 32}), false},
         {"test_exponent_factor", ParamKind::Num, json(0.75), false},
         {"restarts", ParamKind::Int, json(8), false},
         {"norm_rel_tol", ParamKind::Num, json(1e-6), true},
         {"slope_band", ParamKind::Num, json(0.05), true}},
        run_diagonal_sharpness});

    r.push_back(ExperimentInfo{
        "ksz-sharpness",
        "random sign forms: norm growth slope against the 1/2 + sum alpha(p) "
        "exponent",
        {{"m", ParamKind::Int, json(2), false},
         {"ps", ParamKind::NumList, json::array({"inf", "inf"}), false},
         {"Ns", ParamKind::IntList, json::array({4, 8, 16, 32}), false},
         {"seeds_per_size", ParamKind::Int, json(5), false},
         {"restarts", ParamKind::Int, json(32), false},
         {"slope_min", ParamKind::Num, json(0), true},
         {"slope_max", ParamKind::Num, json(0), true},
         {"slope_band", ParamKind::Num, json(0.1), true}},
        run_ksz_sharpness});

    r.push_back(ExperimentInfo{
        "limit-trace",
        "coefficient/sup-norm ratios along p decreasing toward the degree",
        {{"polynomial", ParamKind::Json, json("x1x2"), false},
         {"p_values", ParamKind::NumList, json::array({3, 2.5, 2.1}), false},
         {"exponent", ParamKind::Num, inf_json(), false},
         {"restarts", ParamKind::Int, json(16), false},
         {"match_tol", ParamKind::Num, json(1e-6), true}},
        run_limit_trace});

    r.push_back(ExperimentInfo{
        "interchange-check",
        "nested-norm interchange comparison on random matrices (lambda <= 2)",
        {{"count", ParamKind::Int, json(1000), false},
         {"n", ParamKind::Int, json(5), false},
         {"lambda", ParamKind::Num, json(1.5), false}},
        run_interchange_check});

    r.push_back(ExperimentInfo{
        "interpolation-check",
        "interpolated exponent pairs against the single optimal exponent on a "
        "(p, q) grid",
        {{"p_values", ParamKind::NumList, json::array({4, 5, 6, 8, 10, 16, "inf"}), false},
         {"q_values", ParamKind::NumList, json::array({4, 5, 6, 8, 10, 16, "inf"}), false},
         {"theta", ParamKind::Num, json(0.5), false},
         {"identity_tol", ParamKind::Num, json(1e-12), true}},
        run_interpolation_check});

    return r;
  }();
  return registry;
}

}  // namespace hllab
