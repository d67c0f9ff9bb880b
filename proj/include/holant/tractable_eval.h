// Copyright 2026 The holantc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLANT_TRACTABLE_EVAL_H
#define HOLANT_TRACTABLE_EVAL_H

#include <optional>
#include <string>
#include <vector>

#include "holant/grid.h"

namespace holant {

/// Holant of a closed grid whose signatures all split into factors of arity
/// at most two. Throws NotInFamily otherwise.
Scalar eval_T_closure(const SignatureGrid &g);

/// Holant of a closed grid whose signatures lie in <m o E> (m defaults to
/// the identity). With m, the grid is first made bipartite and pulled back
/// by m^{-1}. Throws NotInFamily when a factor falls outside E.
Scalar eval_E_closure(const SignatureGrid &g, const std::optional<Mat2> &m = std::nullopt);

/// Holant of a closed grid of affine signatures, as one exponential sum.
/// Throws NotInFamily when a signature is not affine.
Scalar eval_affine(const SignatureGrid &g);

/// sum over x in GF(2)^n of i^{c0 + sum_a l_a x_a + 2 sum_{a<b} q_ab x_a x_b}.
///
/// `quadratic` is read as a symmetric 0/1 matrix; only entries a != b are
/// used. Evaluated by eliminating the lowest-index variable first.
Scalar z4_gauss_sum(int c0, std::vector<int> linear, std::vector<std::vector<int>> quadratic);

struct FamilyEvaluation {
    Scalar value;
    /// "T", "E" or "A".
    std::string algorithm;
};

/// Tries the T, E and affine evaluators in that order. Throws NotInFamily
/// when none applies.
FamilyEvaluation eval_by_family(const SignatureGrid &g);

}  // namespace holant

#endif
