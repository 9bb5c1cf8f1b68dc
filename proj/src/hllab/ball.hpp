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

#ifndef HLLAB_BALL_HPP
#define HLLAB_BALL_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hllab/scalar.hpp"

namespace hllab {

/// One l_p exponent per argument slot; p = inf encodes the sup-norm ball
/// (the usual c_0 convention at p = inf).
struct BallSpec {
  std::vector<double> p_values;

  static BallSpec uniform(double p, int m) {
    return BallSpec{std::vector<double>(static_cast<std::size_t>(m), p)};
  }

  void validate(int arity) const {
    if (static_cast<int>(p_values.size()) != arity)
      throw std::invalid_argument("ball spec needs one exponent per slot");
    for (double p : p_values) {
      if (!(p >= 1.0)) throw std::invalid_argument("ball exponents must satisfy p >= 1");
    }
  }
};

/// Holder conjugate p/(p-1), with 1 <-> inf. Rejects p < 1.
inline double dual_exponent(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("dual exponent needs p >= 1");
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

}  // namespace hllab

#endif
