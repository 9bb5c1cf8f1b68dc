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

#ifndef HLLAB_TOLERANCES_HPP
#define HLLAB_TOLERANCES_HPP

namespace hllab {

// Every fixed numeric tolerance used by the library lives here. Experiment
// configs may override the experiment-level bands, never these core values.
struct Tolerances {
  // exact-algebra identities (round trips, diagonal agreement, homogeneity)
  static constexpr double algebra = 1e-12;
  // max entry asymmetry accepted when restricting a form to the diagonal
  static constexpr double symmetry = 1e-12;
  // |value - |eval at witness|| / value for a norm estimate
  static constexpr double certificate_rel = 1e-10;
  // witness distance from the unit sphere
  static constexpr double sphere_residence = 1e-12;
  // alternating maximization: stop when the sweep objective moves less
  static constexpr double ascent_rel_change = 1e-12;
  // projected gradient: stop once the backtracked step is this small
  static constexpr double gradient_min_step = 1e-14;
  static constexpr int gradient_max_iterations = 2000;
  static constexpr int ascent_max_sweeps = 500;
  // diagonal forms: measured norm vs closed form, relative
  static constexpr double diagonal_norm_rel = 1e-6;
  // ratio search result must reproduce from its witness object
  static constexpr double ratio_reproducibility = 1e-8;
  static constexpr double interpolation_identity = 1e-12;
  static constexpr double choi_kim_ceiling = 1e-4;
  static constexpr double limit_trace_match = 1e-6;
  // default slope acceptance bands, per experiment kind
  static constexpr double ksz_slope_band = 0.1;
  static constexpr double diagonal_slope_band = 0.05;
};

}  // namespace hllab

#endif
