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

#include "holant/signature.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "holant/error.h"

using namespace holant;

namespace {

const Scalar kI = Scalar::imag();

Signature ghz() {
    return sigs::equality(3);
}

Signature sum_of_kets(std::initializer_list<std::pair<Scalar, const char *>> terms) {
    Signature acc;
    bool first = true;
    for (const auto &[c, bits] : terms) {
        Signature k = Signature::ket(bits).scaled(c);
        acc = first ? k : acc + k;
        first = false;
    }
    return acc;
}

Signature random_signature(std::mt19937_64 &rng, int arity) {
    static const Scalar choices[] = {0, 1, -1, Scalar::imag(), 2, Scalar::zeta()};
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<Scalar> v(size_t{1} << arity);
    for (auto &x : v) {
        x = choices[pick(rng)];
    }
    return Signature(arity, v);
}

}  // namespace

TEST(signature, shape_checks) {
    EXPECT_THROW(Signature(2, {1, 2, 3}), HolantError);
    EXPECT_THROW(Signature::zero(17), HolantError);
    EXPECT_EQ(Signature().arity(), 0);
    EXPECT_EQ(Signature()[0], Scalar(1));
}

TEST(signature, tensor_product_examples) {
    EXPECT_EQ(tensor_product(sigs::delta0(), sigs::delta0()), Signature::ket("00"));
    EXPECT_EQ(tensor_product(sigs::plus(), sigs::delta1()), sum_of_kets({{1, "01"}, {1, "11"}}));
    EXPECT_EQ(tensor_product(sigs::delta0(), sigs::delta1()), Signature::ket("01"));
    EXPECT_THROW(tensor_product(Signature::zero(9), Signature::zero(8)), HolantError);
}

TEST(signature, apply_unary_examples) {
    EXPECT_EQ(apply_unary(ghz(), 2, sigs::delta0()), Signature::ket("00"));
    EXPECT_EQ(apply_unary(sigs::w_state(), 0, sigs::delta1()), Signature::ket("00"));
    EXPECT_EQ(apply_unary(sigs::w_state(), 0, sigs::plus()), sum_of_kets({{1, "00"}, {1, "01"}, {1, "10"}}));
    EXPECT_THROW(apply_unary(ghz(), 3, sigs::plus()), HolantError);
}

TEST(signature, self_loop_examples) {
    EXPECT_EQ(self_loop(ghz(), 0, 1), sigs::plus());
    EXPECT_EQ(self_loop(sigs::w_state(), 0, 1), sigs::delta1());
    EXPECT_EQ(self_loop(sigs::equality(2), 0, 1), Signature::constant(2));
    try {
        self_loop(ghz(), 1, 1);
        FAIL();
    } catch (const HolantError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidLoop);
    }
}

TEST(signature, holographic_transform_examples) {
    Signature neq = sum_of_kets({{1, "01"}, {1, "10"}});
    EXPECT_EQ(holographic_transform(mats::K(), neq), sigs::equality(2).scaled(2));
    EXPECT_EQ(holographic_transform(mats::X(), sigs::w_state()), sum_of_kets({{1, "110"}, {1, "101"}, {1, "011"}}));
    EXPECT_EQ(holographic_transform(mats::T(), ghz()), sum_of_kets({{1, "000"}, {Scalar::zeta_pow(3), "111"}}));
}

TEST(signature, permute_examples) {
    std::vector<int> swap{1, 0};
    EXPECT_EQ(permute_inputs(Signature::ket("01"), swap), Signature::ket("10"));
    std::vector<int> perm{2, 0, 1};
    EXPECT_EQ(permute_inputs(sigs::w_state(), perm), sigs::w_state());
    std::vector<int> swap23{0, 2, 1};
    EXPECT_EQ(permute_inputs(sum_of_kets({{1, "001"}, {2, "010"}}), swap23), sum_of_kets({{1, "010"}, {2, "001"}}));
    std::vector<int> bad{0, 0, 1};
    EXPECT_THROW(permute_inputs(ghz(), bad), HolantError);
}

TEST(signature, permute_moves_input_j_to_perm_j) {
    // f(x0, x1, x2) = |100>: x0 = 1. Input 0 goes to slot 2.
    std::vector<int> perm{2, 0, 1};
    EXPECT_EQ(permute_inputs(Signature::ket("100"), perm), Signature::ket("001"));
}

TEST(signature, symmetric_shorthand_examples) {
    EXPECT_EQ(symmetric_shorthand(ghz()), (std::vector<Scalar>{1, 0, 0, 1}));
    EXPECT_EQ(symmetric_shorthand(sigs::w_state()), (std::vector<Scalar>{0, 1, 0, 0}));
    EXPECT_FALSE(symmetric_shorthand(sum_of_kets({{1, "01"}, {2, "10"}})).has_value());
}

TEST(signature, factorize_examples) {
    auto f = tensor_product(sigs::delta0(), sigs::equality(2));
    auto factors = tensor_factorize(f);
    ASSERT_EQ(factors.size(), 2u);
    EXPECT_EQ(factors[0].slots, std::vector<int>{0});
    EXPECT_EQ(factors[0].sig, sigs::delta0());
    EXPECT_EQ(factors[1].slots, (std::vector<int>{1, 2}));
    EXPECT_EQ(factors[1].sig, sigs::equality(2));

    EXPECT_EQ(tensor_factorize(ghz()).size(), 1u);
    auto plus3 = tensor_product(sigs::plus(), tensor_product(sigs::plus(), sigs::plus()));
    EXPECT_EQ(tensor_factorize(plus3).size(), 3u);
    EXPECT_THROW(tensor_factorize(Signature::zero(2)), HolantError);
}

TEST(signature, factorize_interleaved_slots) {
    // (|00> + |11>) on slots {0, 2} times |1> + 2|0> on slot 1.
    auto f = permute_inputs(tensor_product(sigs::equality(2), Signature(1, {2, 1})), std::vector<int>{0, 2, 1});
    auto factors = tensor_factorize(f);
    ASSERT_EQ(factors.size(), 2u);
    EXPECT_EQ(factors[0].slots, (std::vector<int>{0, 2}));
    EXPECT_EQ(factors[1].slots, std::vector<int>{1});
    EXPECT_EQ(recombine(factors, 3), f);
}

TEST(signature, degenerate_examples) {
    EXPECT_TRUE(is_degenerate(Signature::from_symmetric(std::vector<Scalar>{1, 2, 4})));
    EXPECT_FALSE(is_degenerate(sigs::equality(2)));
    EXPECT_TRUE(is_degenerate(Signature(1, {3, 5})));
}

TEST(signature, pins_commute) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; t++) {
        Signature f = random_signature(rng, 4);
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (i == j) {
                    continue;
                }
                for (int a = 0; a < 2; a++) {
                    for (int b = 0; b < 2; b++) {
                        Signature first = pin(pin(f, i, a), j > i ? j - 1 : j, b);
                        Signature second = pin(pin(f, j, b), i > j ? i - 1 : i, a);
                        ASSERT_EQ(first, second);
                    }
                }
            }
        }
    }
}

TEST(signature, transform_composes) {
    std::mt19937_64 rng(5);
    std::vector<Mat2> ms{mats::K(), mats::T(), mats::H(), mats::X(), Mat2{1, 2, kI, 0}, Mat2{0, 0, 0, 0}};
    for (int t = 0; t < 20; t++) {
        Signature f = random_signature(rng, 3);
        for (const auto &m1 : ms) {
            for (const auto &m2 : ms) {
                ASSERT_EQ(holographic_transform(m1, holographic_transform(m2, f)), holographic_transform(m1 * m2, f));
            }
        }
    }
}

TEST(signature, factorize_recombines_exhaustive_small) {
    const Scalar choices[] = {0, 1, -1, kI};
    for (int n = 1; n <= 2; n++) {
        size_t count = size_t{1} << (2 * (size_t{1} << n));
        for (size_t code = 0; code < count; code++) {
            std::vector<Scalar> v(size_t{1} << n);
            size_t c = code;
            for (auto &x : v) {
                x = choices[c & 3];
                c >>= 2;
            }
            Signature f(n, v);
            if (f.is_zero()) {
                continue;
            }
            ASSERT_EQ(recombine(tensor_factorize(f), n), f);
        }
    }
}

TEST(signature, factorize_recombines_arity3_exhaustive) {
    const Scalar choices[] = {0, 1, -1, kI};
    for (size_t code = 1; code < (size_t{1} << 16); code++) {
        std::vector<Scalar> v(8);
        size_t c = code;
        for (auto &x : v) {
            x = choices[c & 3];
            c >>= 2;
        }
        Signature f(3, v);
        auto factors = tensor_factorize(f);
        ASSERT_EQ(recombine(factors, 3), f);
        for (const auto &fac : factors) {
            if (fac.sig.arity() >= 2) {
                ASSERT_EQ(tensor_factorize(fac.sig).size(), 1u);
            }
        }
    }
}

TEST(signature, factorize_recombines_random_products) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; t++) {
        // Build a product of random small blocks, then shuffle slots.
        Signature f;
        std::uniform_int_distribution<int> block(1, 3);
        while (f.arity() < 4) {
            Signature g = random_signature(rng, block(rng));
            if (g.is_zero()) {
                continue;
            }
            f = tensor_product(f, g);
        }
        std::vector<int> perm(static_cast<size_t>(f.arity()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        f = permute_inputs(f, perm);
        auto factors = tensor_factorize(f);
        ASSERT_EQ(recombine(factors, f.arity()), f);
        for (const auto &fac : factors) {
            ASSERT_EQ(tensor_factorize(fac.sig).size(), 1u);
        }
    }
}

TEST(signature, str_uses_ket_notation) {
    EXPECT_EQ(sum_of_kets({{1, "00"}, {2, "11"}}).str(), "|00> + 2*|11>");
    EXPECT_EQ(sum_of_kets({{-1, "0"}, {kI + 1, "1"}}).str(), "-|0> + (1 + i)*|1>");
    EXPECT_EQ(Signature::zero(1).str(), "0");
}

TEST(signature, scale_between) {
    auto f = sigs::equality(2);
    EXPECT_EQ(scale_between(f.scaled(kI), f), kI);
    EXPECT_FALSE(scale_between(Signature(2, {1, 0, 0, 2}), f).has_value());
    EXPECT_FALSE(scale_between(Signature::zero(2), Signature::zero(2)).has_value());
}
