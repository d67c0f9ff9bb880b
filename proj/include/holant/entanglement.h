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

#ifndef HOLANT_ENTANGLEMENT_H
#define HOLANT_ENTANGLEMENT_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holant/signature.h"

namespace holant {

enum class TernaryTag { GHZ, W, NotGenuine };

const char *ternary_tag_name(TernaryTag tag);

struct TernaryClass {
    TernaryTag tag = TernaryTag::NotGenuine;
    /// Factorization witness; filled only for NotGenuine.
    std::vector<Factor> witness;
};

/// (a0a7 - a2a5 + a1a6 - a3a4)^2 - 4(a2a4 - a0a6)(a3a5 - a1a7) with a_k = f[k].
Scalar ghz_polynomial(const Signature &f);
/// The three-clause condition separating W type from product signatures.
bool w_clauses(const Signature &f);
TernaryClass ternary_class(const Signature &f);

enum class UnaryLabel { Zero, One, Plus, Minus };

char unary_label_char(UnaryLabel label);
Signature unary_of(UnaryLabel label);

struct Projection {
    /// Slots that were projected, ascending, with the unary used on each.
    std::vector<int> slots;
    std::vector<UnaryLabel> labels;
    /// Remaining binary signature with slot j first and slot k second.
    Signature residual;
};

/// First choice (lexicographic, 0 < 1 < + < -, lowest slot most
/// significant) of unaries on all slots other than j, k that leaves an
/// entangled binary signature. Throws ExhaustionFailure if none exists.
Projection find_entangling_projection(const Signature &f, int j, int k);

struct DistanceProfile {
    int level = 0;
    int value = 0;
    /// Slots the bit strings range over (all slots for level 0).
    std::vector<int> slots;
    std::string x, y;
    std::vector<std::string> a_set, b_set;
};

/// Level 0: minimum distance between distinct support strings. Levels 1-3:
/// with `anchor` living on `anchor_slots`, the strings are pinnings of the
/// remaining slots; A holds pinnings that reproduce a non-zero multiple of
/// the anchor, B those giving a different non-zero signature. Throws
/// ProfileUndefined when a needed set is empty.
DistanceProfile distance_profile(const Signature &f, int level, const std::optional<Signature> &anchor = std::nullopt,
                                 std::span<const int> anchor_slots = {});

/// Value of f at the string that has `bits` on `slots` and `rest` elsewhere.
/// Small helper shared by the case analysis.
size_t merge_index(int arity, std::span<const int> slots, size_t bits, std::span<const int> rest_slots, size_t rest);

int hamming(const std::string &a, const std::string &b);

}  // namespace holant

#endif
