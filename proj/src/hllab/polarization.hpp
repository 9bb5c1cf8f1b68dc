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

#ifndef HLLAB_POLARIZATION_HPP
#define HLLAB_POLARIZATION_HPP

#include "hllab/form.hpp"
#include "hllab/polynomial.hpp"

namespace hllab {

/// The unique symmetric m-linear form L associated to P, fixed by the
/// coefficient identity a_alpha = C(m, alpha) * L(e^alpha). Entries sharing
/// an index multiset are equal by construction.
MultilinearForm polarize(const HomogeneousPolynomial& P);

/// Inverse direction: the polynomial P(x) = L(x, ..., x) of a symmetric
/// form, with a_alpha = C(m, alpha) * L(e^alpha). Rejects forms whose
/// max_asymmetry exceeds Tolerances::symmetry (relative to the largest
/// entry).
HomogeneousPolynomial restrict_diagonal(const MultilinearForm& L);

/// Entries averaged over all index permutations. Symmetric output; agrees
/// with the input on diagonal evaluations T(x, ..., x).
MultilinearForm symmetrize(const MultilinearForm& T);

}  // namespace hllab

#endif
