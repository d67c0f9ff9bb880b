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

#include "holant/entanglement.h"

#include "gtest/gtest.h"
#include "holant/error.h"
#include "test_util.h"

using namespace holant;

namespace {

Signature from_bits_pattern(int arity, size_t pattern) {
    std::vector<Scalar> v(size_t{1} << arity);
    for (size_t x = 0; x < v.size(); x++) {
        v[x] = static_cast<long>((pattern >> x) & 1);
    }
    return Signature(arity, std::move(v));
}

}  // namespace

TEST(entanglement, ternary_examples) {
    EXPECT_EQ(ghz_polynomial(sigs::equality(3)), Scalar(1));
    EXPECT_EQ(ternary_class(sigs::equality(3)).tag, TernaryTag::GHZ);
    EXPECT_TRUE(ghz_polynomial(sigs::w_state()).is_zero());
    EXPECT_TRUE(w_clauses(sigs::w_state()));
    EXPECT_EQ(ternary_class(sigs::w_state()).tag, TernaryTag::W);
    auto c = ternary_class(tensor_product(sigs::delta0(), sigs::equality(2)));
    EXPECT_EQ(c.tag, TernaryTag::NotGenuine);
    ASSERT_EQ(c.witness.size(), 2u);
    EXPECT_EQ(c.witness[0].slots, std::vector<int>{0});
    EXPECT_EQ(c.witness[1].slots, (std::vector<int>{1, 2}));
    EXPECT_THROW(ternary_class(sigs::equality(2)), HolantError);
    EXPECT_THROW(ternary_class(Signature::zero(3)), HolantError);
}

TEST(entanglement, criterion_agrees_with_factorization_on_all_sign_patterns) {
    const Scalar vals[] = {0, 1, -1};
    int checked = 0;
    for (int code = 0; code < 6561; code++) {
        std::vector<Scalar> v(8);
        int c = code;
        for (auto &x : v) {
            x = vals[c % 3];
            c /= 3;
        }
        Signature f(3, v);
        if (f.is_zero()) {
            continue;
        }
        bool factorable = tensor_factorize(f).size() > 1;
        bool criterion_says_product = ghz_polynomial(f).is_zero() && !w_clauses(f);
        ASSERT_EQ(criterion_says_product, factorable) << f;
        checked++;
    }
    EXPECT_EQ(checked, 6560);
}

TEST(entanglement, classes_stable_under_local_transforms) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; t++) {
        Mat2 a = holant::testing::random_invertible(rng);
        Mat2 b = holant::testing::random_invertible(rng);
        Mat2 c = holant::testing::random_invertible(rng);
        auto local = [&](const Signature &f) { return apply_local(apply_local(apply_local(f, 0, a), 1, b), 2, c); };
        ASSERT_EQ(ternary_class(local(sigs::equality(3))).tag, TernaryTag::GHZ);
        ASSERT_EQ(ternary_class(local(sigs::w_state())).tag, TernaryTag::W);
    }
}

TEST(entanglement, genuine_examples) {
    EXPECT_TRUE(is_genuinely_entangled(sigs::equality(4)));
    EXPECT_FALSE(is_genuinely_entangled(Signature(2, {1, 1, 0, 0})));
    EXPECT_TRUE(is_genuinely_entangled(Signature::ket("0011") + Signature::ket("1100")));
}

TEST(entanglement, projection_examples) {
    auto p = find_entangling_projection(sigs::equality(3), 0, 1);
    EXPECT_EQ(p.slots, std::vector<int>{2});
    // |0> is tried first but leaves the product |00>.
    EXPECT_EQ(p.labels, std::vector<UnaryLabel>{UnaryLabel::Plus});
    EXPECT_EQ(p.residual, sigs::equality(2));

    auto w = find_entangling_projection(sigs::w_state(), 0, 1);
    EXPECT_EQ(w.labels, std::vector<UnaryLabel>{UnaryLabel::Zero});
    EXPECT_EQ(w.residual, Signature::ket("01") + Signature::ket("10"));

    auto g4 = find_entangling_projection(sigs::equality(4), 0, 1);
    EXPECT_EQ(g4.labels, (std::vector<UnaryLabel>{UnaryLabel::Plus, UnaryLabel::Plus}));

    EXPECT_THROW(find_entangling_projection(Signature::ket("000"), 0, 1), HolantError);
}

TEST(entanglement, projection_residual_order_follows_j_k) {
    Signature f = Signature::ket("001") + Signature::ket("110").scaled(2);
    auto p = find_entangling_projection(f, 2, 0);
    EXPECT_EQ(p.slots, std::vector<int>{1});
    // Slot 2 first, slot 0 second: |10> + 2|01> after projecting slot 1 onto |+>.
    EXPECT_EQ(p.residual, Signature::ket("10") + Signature::ket("01").scaled(2));
}

TEST(entanglement, projection_always_entangles_binary_patterns) {
    // Every genuinely entangled {0,1} signature up to arity 4; all slot
    // pairs up to arity 3, pairs (0, 1) and (3, 1) at arity 4.
    for (int n = 2; n <= 4; n++) {
        for (size_t pat = 1; pat < (size_t{1} << (size_t{1} << n)); pat++) {
            Signature f = from_bits_pattern(n, pat);
            if (!is_genuinely_entangled(f)) {
                continue;
            }
            for (int j = 0; j < n; j++) {
                for (int k = 0; k < n; k++) {
                    if (j == k || (n == 4 && !((j == 0 && k == 1) || (j == 3 && k == 1)))) {
                        continue;
                    }
                    auto p = find_entangling_projection(f, j, k);
                    ASSERT_FALSE(binary_det(p.residual).is_zero());
                    // Independent replay of the projection.
                    Signature r = f;
                    for (size_t t = p.slots.size(); t-- > 0;) {
                        r = apply_unary(r, p.slots[t], unary_of(p.labels[t]));
                    }
                    if (j > k) {
                        r = permute_inputs(r, std::vector<int>{1, 0});
                    }
                    ASSERT_EQ(r, p.residual);
                }
            }
        }
    }
}

TEST(entanglement, projection_random_arity5) {
    std::mt19937_64 rng(17);
    int hits = 0;
    while (hits < 300) {
        Signature f = from_bits_pattern(5, rng() & 0xffffffffu);
        if (f.is_zero() || !is_genuinely_entangled(f)) {
            continue;
        }
        hits++;
        auto p = find_entangling_projection(f, 0, 4);
        ASSERT_FALSE(binary_det(p.residual).is_zero());
    }
}

TEST(entanglement, distance_examples) {
    Signature f = Signature::ket("0000") + Signature::ket("1111").scaled(3);
    EXPECT_EQ(distance_profile(f, 0).value, 4);
    Signature g = Signature::ket("000") + Signature::ket("011") + Signature::ket("101") + Signature::ket("110");
    EXPECT_EQ(distance_profile(g, 0).value, 2);
    Signature h = Signature::ket("0000") + Signature::ket("0011") + Signature::ket("1111");
    auto p = distance_profile(h, 0);
    EXPECT_EQ(p.value, 2);
    EXPECT_EQ(p.x, "0000");
    EXPECT_EQ(p.y, "0011");
}

TEST(entanglement, distance_level_one) {
    // Anchor |00> + |11> on slots 0, 1 from pinning the rest of h to 00.
    Signature h = Signature::ket("0000") + Signature::ket("0011") + Signature::ket("1111");
    std::vector<int> slots{0, 1};
    auto p = distance_profile(h, 1, Signature::ket("00"), slots);
    EXPECT_EQ(p.slots, (std::vector<int>{2, 3}));
    EXPECT_EQ(p.a_set, std::vector<std::string>{"00"});
    EXPECT_EQ(p.b_set, std::vector<std::string>{"11"});
    EXPECT_EQ(p.value, 2);
    try {
        distance_profile(sigs::equality(4), 1, sigs::equality(2), slots);
        FAIL();
    } catch (const HolantError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ProfileUndefined);
    }
    EXPECT_THROW(distance_profile(h, 2, Signature::ket("00"), slots), HolantError);
}
