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

#ifndef HOLANT_FAMILIES_H
#define HOLANT_FAMILIES_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holant/signature.h"

namespace holant {

/// c * i^{l(t)} * (-1)^{q(t)} on the affine support {offset + sum_j t_j basis_j}.
///
/// Bit masks use the signature index convention (slot s is bit n-1-s).
/// The basis is in reduced row-echelon form: each basis vector owns a pivot
/// bit that no other basis vector (and not the offset) has set, so t_j is
/// simply the pivot bit of the point.
struct AffineForm {
    int arity = 0;
    uint32_t offset = 0;
    std::vector<uint32_t> basis;
    std::vector<int> pivots;
    /// Z4 coefficients l_j.
    std::vector<int> linear;
    /// quadratic[j][k] for j < k, over GF(2).
    std::vector<std::vector<int>> quadratic;
    Scalar prefactor;

    int rank() const {
        return static_cast<int>(basis.size());
    }
    /// Exponent of i at free-variable point t (bit j of t = t_j), in 0..3.
    int exponent(uint32_t t) const;
    uint32_t point(uint32_t t) const;
    Signature to_signature() const;
};

std::optional<AffineForm> is_affine(const Signature &f);

bool in_E(const Signature &f);
bool in_M(const Signature &f);
/// Every tensor factor of f has arity <= 2.
bool in_T(const Signature &f);
bool in_L(const Signature &f);
bool is_in_cS(const Mat2 &s);

enum class Membership { Member, NotMember, Unknown };
const char *membership_name(Membership m);

struct FamilyVerdict {
    Membership member = Membership::NotMember;
    /// One of T, OE, KE, KM, KXM, A, SA, L, E, M.
    std::string family;
    std::optional<Mat2> transform;
    /// Free-text witness (e.g. the polynomial whose roots give O).
    std::string witness;
    std::string reason;
    /// Index of the first signature that failed, when not a member.
    int failing_index = -1;

    bool is_member() const {
        return member == Membership::Member;
    }
};

enum class BaseFamily { E, M };

FamilyVerdict in_T_closure(std::span<const Signature> set);
/// Each genuinely entangled factor g of each signature satisfies m^{-1} o g in the family.
FamilyVerdict in_transformed_closure(std::span<const Signature> set, const Mat2 &m, BaseFamily family);
/// Decides whether some complex orthogonal O has set within <O o E>.
FamilyVerdict exists_orthogonal_O(std::span<const Signature> set);
FamilyVerdict in_A(std::span<const Signature> set);
FamilyVerdict in_L_set(std::span<const Signature> set);

/// The named candidates (identity, X, T, TX, K, KX, diag(1,i), Z, H and
/// their pairwise products) that lie in S, deduplicated up to scalars.
std::vector<Mat2> named_cS_candidates();
/// Every element of S up to a non-zero scalar factor.
std::vector<Mat2> enumerate_cS();
/// named_cS_candidates followed by the rest of enumerate_cS.
std::vector<Mat2> default_cS_candidates();

/// Member if some candidate S in S has S^{-1} o f affine for every f. With
/// `exhaustive` the candidate list is known to cover S, so failure is
/// NotMember; otherwise failure is Unknown.
FamilyVerdict exists_S_in_cS(std::span<const Signature> set, std::span<const Mat2> candidates, bool exhaustive);
FamilyVerdict exists_S_in_cS(std::span<const Signature> set);

/// The tractable families for Holant^*: T, OE, KE, KM, KXM in that order.
FamilyVerdict holant_star_tractable(std::span<const Signature> set);

/// Returns f transformed by diag(1, w), w^3 = 1, that makes f omega-normalised,
/// together with that matrix. f must be unary or binary symmetric.
std::pair<Signature, Mat2> omega_normalise(const Signature &f);
bool is_omega_normalised(const Signature &f);

}  // namespace holant

#endif
