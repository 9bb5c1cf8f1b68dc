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

#include "hllab.h"

#include <cstring>
#include <new>
#include <string>

#include "hllab/certificates.hpp"
#include "hllab/norms.hpp"
#include "hllab/optimize.hpp"
#include "hllab/polarization.hpp"
#include "hllab/runner.hpp"
#include "hllab/serialization.hpp"
#include "hllab/theory.hpp"

using namespace hllab;

struct hll_poly {
  HomogeneousPolynomial value;
};
struct hll_form {
  MultilinearForm value;
};
struct hll_estimate {
  NormEstimate value;
};

namespace {

thread_local std::string g_last_error;

hll_status fail(hll_status code, const char* what) {
  g_last_error = what;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hll_status return_string(const std::string& s, char** out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  char* copy = dup_string(s);
  if (!copy) return fail(HLL_ERR_INTERNAL, "out of memory");
  *out = copy;
  return HLL_OK;
}

// runs a callable, translating exceptions into status codes
template <typename Fn>
hll_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    return fail(HLL_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HLL_ERR_ARGUMENT, e.what());
  } catch (const SchemaError& e) {
    return fail(HLL_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(HLL_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(HLL_ERR_INTERNAL, e.what());
  }
}

Field to_field(hll_field f) { return f == HLL_FIELD_REAL ? Field::Real : Field::Complex; }

std::vector<Cplx> pack_point(const double* re, const double* im, int n) {
  std::vector<Cplx> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    x[static_cast<std::size_t>(j)] = Cplx(re[j], im ? im[j] : 0.0);
  return x;
}

}  // namespace

extern "C" {

const char* hll_version(void) { return kVersion; }

const char* hll_last_error(void) { return g_last_error.c_str(); }

void hll_string_free(char* s) { ::operator delete(s); }

hll_status hll_poly_from_json(const char* json_text, hll_poly** out) {
  if (!json_text || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    *out = new hll_poly{polynomial_from_json(j)};
    return HLL_OK;
  });
}

hll_status hll_poly_to_json(const hll_poly* p, char** out_json) {
  if (!p) return fail(HLL_ERR_ARGUMENT, "null polynomial");
  return guarded([&] { return return_string(to_json(p->value).dump(), out_json); });
}

void hll_poly_free(hll_poly* p) { delete p; }

hll_status hll_form_from_json(const char* json_text, hll_form** out) {
  if (!json_text || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    *out = new hll_form{form_from_json(j)};
    return HLL_OK;
  });
}

hll_status hll_form_to_json(const hll_form* t, char** out_json) {
  if (!t) return fail(HLL_ERR_ARGUMENT, "null form");
  return guarded([&] { return return_string(to_json(t->value).dump(), out_json); });
}

void hll_form_free(hll_form* t) { delete t; }

hll_status hll_diagonal_form(int n, hll_form** out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new hll_form{diagonal_form(n)};
    return HLL_OK;
  });
}

hll_status hll_ksz_form(int m, int n, uint64_t seed, hll_form** out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new hll_form{ksz_random_form(m, n, seed)};
    return HLL_OK;
  });
}

hll_status hll_poly_dims(const hll_poly* p, int* n, int* m, hll_field* field) {
  if (!p) return fail(HLL_ERR_ARGUMENT, "null polynomial");
  if (n) *n = p->value.dimension();
  if (m) *m = p->value.degree();
  if (field)
    *field = p->value.field() == Field::Real ? HLL_FIELD_REAL : HLL_FIELD_COMPLEX;
  return HLL_OK;
}

hll_status hll_form_dims(const hll_form* t, int* n, int* m, hll_field* field) {
  if (!t) return fail(HLL_ERR_ARGUMENT, "null form");
  if (n) *n = t->value.dimension();
  if (m) *m = t->value.arity();
  if (field)
    *field = t->value.field() == Field::Real ? HLL_FIELD_REAL : HLL_FIELD_COMPLEX;
  return HLL_OK;
}

hll_status hll_poly_eval(const hll_poly* p, const double* re, const double* im, int n,
                         double* out_re, double* out_im) {
  if (!p || !re || !out_re) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<Cplx> x = pack_point(re, im, n);
    const Cplx v = p->value(std::span<const Cplx>(x));
    *out_re = v.real();
    if (out_im) *out_im = v.imag();
    return HLL_OK;
  });
}

hll_status hll_form_eval(const hll_form* t, const double* re, const double* im, int m,
                         int n, double* out_re, double* out_im) {
  if (!t || !re || !out_re) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::vector<Cplx>> points;
    points.reserve(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s)
      points.push_back(pack_point(re + static_cast<std::size_t>(s) * static_cast<std::size_t>(n),
                                  im ? im + static_cast<std::size_t>(s) * static_cast<std::size_t>(n) : nullptr,
                                  n));
    const Cplx v = t->value(points);
    *out_re = v.real();
    if (out_im) *out_im = v.imag();
    return HLL_OK;
  });
}

hll_status hll_polarize(const hll_poly* p, hll_form** out) {
  if (!p || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new hll_form{polarize(p->value)};
    return HLL_OK;
  });
}

hll_status hll_restrict(const hll_form* t, hll_poly** out) {
  if (!t || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new hll_poly{restrict_diagonal(t->value)};
    return HLL_OK;
  });
}

hll_status hll_symmetrize(const hll_form* t, hll_form** out) {
  if (!t || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new hll_form{symmetrize(t->value)};
    return HLL_OK;
  });
}

hll_status hll_poly_coeff_norm(const hll_poly* p, double r, double* out) {
  if (!p || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = coeff_norm(p->value, r);
    return HLL_OK;
  });
}

hll_status hll_form_coeff_norm(const hll_form* t, double r, double* out) {
  if (!t || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = coeff_norm(t->value, r);
    return HLL_OK;
  });
}

hll_status hll_mixed_norm_bilinear(const hll_form* t, double r_inner, double r_outer,
                                   double* out) {
  if (!t || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = mixed_norm_bilinear(t->value, r_inner, r_outer);
    return HLL_OK;
  });
}

hll_status hll_dual_exponent(double p, double* out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = dual_exponent(p);
    return HLL_OK;
  });
}

hll_status hll_poly_norm_lower(const hll_poly* p, double ball_p, int restarts,
                               uint64_t seed, hll_estimate** out) {
  if (!p || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    *out = new hll_estimate{poly_norm_lower(p->value, ball_p, opt)};
    return HLL_OK;
  });
}

hll_status hll_form_norm_lower(const hll_form* t, const double* ps, int m, int restarts,
                               uint64_t seed, hll_estimate** out) {
  if (!t || !ps || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    const BallSpec balls{std::vector<double>(ps, ps + m)};
    *out = new hll_estimate{form_norm_lower(t->value, balls, opt)};
    return HLL_OK;
  });
}

hll_status hll_form_norm_upper(const hll_form* t, const double* ps, int m, double* out) {
  if (!t || !ps || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const BallSpec balls{std::vector<double>(ps, ps + m)};
    *out = form_norm_upper(t->value, balls);
    return HLL_OK;
  });
}

hll_status hll_poly_norm_bracket(const hll_poly* p, double ball_p, int restarts,
                                 uint64_t seed, double* lower, double* upper) {
  if (!p || !lower || !upper) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    AscentOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    const Bracket b = poly_norm_bracket(p->value, ball_p, opt);
    *lower = b.lower;
    *upper = b.upper;
    return HLL_OK;
  });
}

double hll_estimate_value(const hll_estimate* e) { return e ? e->value.value : 0.0; }

int hll_estimate_converged(const hll_estimate* e) {
  return e && e->value.converged ? 1 : 0;
}

hll_status hll_estimate_to_json(const hll_estimate* e, char** out_json) {
  if (!e) return fail(HLL_ERR_ARGUMENT, "null estimate");
  return guarded([&] { return return_string(to_json(e->value).dump(), out_json); });
}

void hll_estimate_free(hll_estimate* e) { delete e; }

hll_status hll_multilinear_exponent(int m, double p, double* out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = multilinear_exponent(m, p);
    return HLL_OK;
  });
}

hll_status hll_polynomial_exponent(int m, double p, double* out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = polynomial_exponent(m, p);
    return HLL_OK;
  });
}

hll_status hll_regime(int m, double p, const char** out_name) {
  if (!out_name) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out_name = regime_name(classify_regime(m, p));
    return HLL_OK;
  });
}

hll_status hll_bilinear_mixed_exponents(double p, double q, double* inner, double* outer) {
  if (!inner || !outer) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const ExponentPair pair = bilinear_mixed_exponents(p, q);
    *inner = pair.inner;
    *outer = pair.outer;
    return HLL_OK;
  });
}

hll_status hll_symmetric_exponent(double p, double q, double* out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = symmetric_exponent(p, q);
    return HLL_OK;
  });
}

hll_status hll_interpolate_exponent_pairs(double a_inner, double a_outer, double b_inner,
                                          double b_outer, double theta, double* out_inner,
                                          double* out_outer) {
  if (!out_inner || !out_outer) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const ExponentPair out = interpolate_exponent_pairs(ExponentPair{a_inner, a_outer},
                                                        ExponentPair{b_inner, b_outer}, theta);
    *out_inner = out.inner;
    *out_outer = out.outer;
    return HLL_OK;
  });
}

hll_status hll_ksz_alpha(double p, double* out) {
  if (!out) return fail(HLL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = ksz_alpha(p);
    return HLL_OK;
  });
}

hll_status hll_ksz_exponent(int m, const double* ps, double* out) {
  if (!ps || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = ksz_exponent(m, std::span<const double>(ps, static_cast<std::size_t>(m)));
    return HLL_OK;
  });
}

hll_status hll_constant_upper_bound(int m, double p, hll_field field, const char* method,
                                    double* out) {
  if (!method || !out) return fail(HLL_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = constant_upper_bound(m, p, to_field(field), bound_method_from_name(method)).value;
    return HLL_OK;
  });
}

hll_status hll_list_experiments(char** out_text) {
  return guarded([&] {
    std::string text;
    for (const ExperimentInfo& info : experiment_registry()) {
      text += info.name;
      text += '\t';
      text += info.description;
      text += '\n';
    }
    return return_string(text, out_text);
  });
}

hll_status hll_default_config(const char* experiment, char** out_json) {
  if (!experiment) return fail(HLL_ERR_ARGUMENT, "null experiment name");
  return guarded([&] { return return_string(default_config_json(experiment).dump(2), out_json); });
}

hll_status hll_run_config(const char* config_json, const char* out_dir_override,
                          uint64_t seed_override, int seed_override_set, int* exit_code) {
  if (!config_json || !exit_code) return fail(HLL_ERR_ARGUMENT, "null argument");
  nlohmann::json cfg = nlohmann::json::parse(config_json, nullptr, false);
  if (cfg.is_discarded()) {
    *exit_code = kExitSchema;
    g_last_error = "config is not valid JSON";
    return HLL_OK;
  }
  if (cfg.is_object()) {
    if (out_dir_override && *out_dir_override) cfg["output"] = out_dir_override;
    if (seed_override_set) cfg["seed"] = seed_override;
  }
  std::string message;
  *exit_code = run_config_json(cfg, &message);
  if (*exit_code != kExitOk) g_last_error = message;
  return HLL_OK;
}

}  // extern "C"
