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

#ifndef HLLAB_OPTIMIZE_HPP
#define HLLAB_OPTIMIZE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hllab/ball.hpp"
#include "hllab/form.hpp"
#include "hllab/norm_estimate.hpp"
#include "hllab/polynomial.hpp"
#include "hllab/tolerances.hpp"

namespace hllab {

/// Knobs shared by both maximizers. Restart i runs from seed + i; the best
/// value wins with ties going to the lowest restart index, so results do
/// not depend on any execution order.
struct AscentOptions {
  int restarts = 32;
  std::uint64_t seed = 1;
  int max_sweeps = Tolerances::ascent_max_sweeps;            // alternating
  int max_iterations = Tolerances::gradient_max_iterations;  // projected gradient
  double rel_tol = Tolerances::ascent_rel_change;
  double min_step = Tolerances::gradient_min_step;
  /// When set, receives the per-update objective trace of every restart.
  std::vector<std::vector<double>>* trace_sink = nullptr;
};

/// Exact maximizer of Re sum phi_j x_j over the unit l_p ball: returns the
/// point x with ||x||_p = 1 and the attained value ||phi||_{p'}. Complex
/// inputs get their phases aligned so the pairing is real. p = inf uses
/// the sign/phase vector (ties on zero coordinates resolve to +1); p = 1
/// concentrates on the largest |phi_j| with the lowest-index tie-break.
/// Rejects the zero vector.
std::pair<std::vector<Cplx>, double> norming_vector(std::span<const Cplx> phi, double p);

/// Alternating maximization of |T(x_1,...,x_m)| over the product of unit
/// l_p balls. Each slot update is the closed-form norming_vector, so the
/// per-restart objective sequence is non-decreasing. Deterministic for
/// fixed (seed, restarts).
NormEstimate form_norm_lower(const MultilinearForm& T, const BallSpec& balls,
                             const AscentOptions& opt = {});

/// Rigorous upper bound: slot-recursive Holder/triangle estimate
/// ||T|| <= || ( ||T(e_j, .)|| )_j ||_{p_1'}.
double form_norm_upper(const MultilinearForm& T, const BallSpec& balls);

/// Multi-start projected gradient ascent of |P| on the unit l_p sphere
/// (rescaling projection; valid because P is homogeneous). Complex fields
/// are optimized over 2n real coordinates.
NormEstimate poly_norm_lower(const HomogeneousPolynomial& P, double p,
                             const AscentOptions& opt = {});

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower from poly_norm_lower, upper from form_norm_upper of the
/// associated symmetric form.
Bracket poly_norm_bracket(const HomogeneousPolynomial& P, double p,
                          const AscentOptions& opt = {});

}  // namespace hllab

#endif
