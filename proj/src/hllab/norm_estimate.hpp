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

#ifndef HLLAB_NORM_ESTIMATE_HPP
#define HLLAB_NORM_ESTIMATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hllab/scalar.hpp"

namespace hllab {

/// Certified lower bound on a sup norm: the value is |object evaluated at
/// witness| with every witness vector sitting on its unit sphere, so the
/// estimate can always be re-verified from the witness alone.
struct NormEstimate {
  double value = 0.0;
  /// One vector per argument slot (a single vector for polynomials).
  std::vector<std::vector<Cplx>> witness;
  int restarts_used = 0;
  long iterations = 0;
  bool converged = false;
  /// "alternating" or "projected-gradient".
  std::string method;
  std::uint64_t seed = 0;
  /// Objective values of the winning restart, one per accepted update.
  std::vector<double> trace;
};

}  // namespace hllab

#endif
