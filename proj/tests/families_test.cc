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

#include "holant/families.h"

#include <bit>

#include "gtest/gtest.h"
#include "holant/error.h"
#include "test_util.h"

using namespace holant;

namespace {

const Scalar kI = Scalar::imag();

Signature sym(std::vector<Scalar> w) {
    return Signature::from_symmetric(w);
}

}  // namespace

TEST(families, e_and_m_examples) {
    EXPECT_TRUE(in_E(sigs::equality(3)));
    EXPECT_TRUE(in_M(sigs::w_state()));
    EXPECT_FALSE(in_E(sigs::w_state()));
    EXPECT_TRUE(in_E(Signature::ket("001") + Signature::ket("110")));
    EXPECT_THROW(in_E(Signature::zero(2)), HolantError);
}

TEST(families, t_closure_examples) {
    Signature prod = tensor_product(Signature(1, {1, 2}), tensor_product(Signature(1, {1, 2}), Signature(1, {1, 2})));
    std::vector<Signature> s1{sym({1, 2, 1}), prod};
    EXPECT_TRUE(in_T_closure(s1).is_member());
    std::vector<Signature> s2{sigs::equality(3)};
    auto v = in_T_closure(s2);
    EXPECT_EQ(v.member, Membership::NotMember);
    EXPECT_NE(v.reason.find("arity 3"), std::string::npos);
    EXPECT_TRUE(in_T_closure({}).is_member());
}

TEST(families, transformed_closure_examples) {
    std::vector<Signature> eq2{sigs::equality(2)};
    EXPECT_TRUE(in_transformed_closure(eq2, mats::K(), BaseFamily::E).is_member());
    std::vector<Signature> kw{holographic_transform(mats::K(), sigs::w_state())};
    EXPECT_TRUE(in_transformed_closure(kw, mats::K(), BaseFamily::M).is_member());
    std::vector<Signature> w{sigs::w_state()};
    EXPECT_FALSE(in_transformed_closure(w, mats::K(), BaseFamily::M).is_member());
    EXPECT_THROW(in_transformed_closure(w, Mat2::diag(1, 0), BaseFamily::M), HolantError);
}

TEST(families, transformed_closure_consistency) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; t++) {
        Mat2 m = t % 3 == 0 ? mats::K() : holant::testing::random_invertible(rng);
        std::vector<Signature> set;
        for (int k = 0; k < 2; k++) {
            Signature e = Signature::ket(k ? "011" : "01") + Signature::ket(k ? "100" : "10").scaled(2);
            // Half the sets are built inside m o E, the rest are random.
            set.push_back(t % 2 ? holographic_transform(m, e) : holant::testing::random_signature(rng, 2 + k));
        }
        if (std::any_of(set.begin(), set.end(), [](const Signature &f) { return f.is_zero(); })) {
            continue;
        }
        std::vector<Signature> pulled;
        for (const auto &f : set) {
            pulled.push_back(holographic_transform(m.inverse(), f));
        }
        for (auto fam : {BaseFamily::E, BaseFamily::M}) {
            ASSERT_EQ(in_transformed_closure(set, m, fam).is_member(),
                      in_transformed_closure(pulled, Mat2::identity(), fam).is_member());
        }
        if (t % 2) {
            ASSERT_TRUE(in_transformed_closure(set, m, BaseFamily::E).is_member());
        }
    }
}

TEST(families, orthogonal_examples) {
    std::vector<Signature> a{sigs::equality(2), sigs::equality(3)};
    auto v = exists_orthogonal_O(a);
    ASSERT_TRUE(v.is_member());
    EXPECT_EQ(*v.transform, Mat2::identity());
    std::vector<Signature> b{sigs::equality(2), Signature::ket("01") + Signature::ket("10")};
    EXPECT_TRUE(exists_orthogonal_O(b).is_member());
    std::vector<Signature> c{sigs::equality(3), sym({1, 2, 1})};
    EXPECT_EQ(exists_orthogonal_O(c).member, Membership::NotMember);
}

TEST(families, orthogonal_diagonalises_symmetric_binary) {
    // [1,2,1] has orthogonal non-isotropic eigenvectors (1,1), (1,-1).
    std::vector<Signature> s{sym({1, 2, 1})};
    auto v = exists_orthogonal_O(s);
    ASSERT_TRUE(v.is_member());
    ASSERT_TRUE(v.transform.has_value());
    EXPECT_TRUE(in_transformed_closure(s, *v.transform, BaseFamily::E).is_member());
}

TEST(families, orthogonal_recovers_planted_rotation) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; trial++) {
        Scalar t(mpq_class(std::uniform_int_distribution<long>(-5, 5)(rng), std::uniform_int_distribution<long>(1, 4)(rng)));
        if (t.is_zero()) {
            continue;
        }
        Mat2 o{1, -t, t, 1};
        std::vector<Signature> set{holographic_transform(o, Signature::ket("001") + Signature::ket("110").scaled(3)),
                                   holographic_transform(o, sigs::equality(4).scaled(kI))};
        auto v = exists_orthogonal_O(set);
        ASSERT_TRUE(v.is_member());
        ASSERT_TRUE(v.transform.has_value());
        ASSERT_TRUE(in_transformed_closure(set, *v.transform, BaseFamily::E).is_member());
    }
}

TEST(families, orthogonal_rejections_survive_grid_search) {
    // Falsification oracle: no rational t in a small grid may work when the
    // decision says NotMember.
    std::vector<std::vector<Signature>> sets{{sigs::equality(3), sym({1, 2, 1})},
                                             {sigs::w_state()},
                                             {sym({1, 1, 0, 2})}};
    for (const auto &set : sets) {
        ASSERT_EQ(exists_orthogonal_O(set).member, Membership::NotMember);
        for (long p = -6; p <= 6; p++) {
            for (long q = 1; q <= 4; q++) {
                Scalar t(mpq_class(p, q));
                ASSERT_FALSE(in_transformed_closure(set, Mat2{1, -t, t, 1}, BaseFamily::E).is_member());
            }
        }
    }
}

TEST(families, affine_examples) {
    for (int n = 1; n <= 8; n++) {
        auto form = is_affine(sigs::equality(n));
        ASSERT_TRUE(form.has_value());
        EXPECT_EQ(form->rank(), 1);
        EXPECT_EQ(form->linear[0], 0);
    }
    auto cz = is_affine(Signature(2, {1, 1, 1, -1}));
    ASSERT_TRUE(cz.has_value());
    EXPECT_EQ(cz->rank(), 2);
    EXPECT_EQ(cz->quadratic[0][1], 1);
    EXPECT_EQ(cz->linear, (std::vector<int>{0, 0}));
    EXPECT_FALSE(is_affine(sym({1, 2, 1})).has_value());
    EXPECT_FALSE(is_affine(sigs::w_state()).has_value());
    EXPECT_FALSE(is_affine(Signature(2, {1, 0, 0, Scalar::zeta()})).has_value());
}

TEST(families, affine_round_trip_random) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 600; t++) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        Signature f = holant::testing::random_affine(rng, n);
        auto form = is_affine(f);
        ASSERT_TRUE(form.has_value()) << f;
        ASSERT_EQ(form->to_signature(), f);
        for (size_t j = 0; j < form->basis.size(); j++) {
            for (size_t k = 0; k < form->basis.size(); k++) {
                ASSERT_EQ(((form->basis[k] >> form->pivots[j]) & 1) != 0, j == k);
            }
            ASSERT_EQ((form->offset >> form->pivots[j]) & 1, 0u);
        }
    }
}

TEST(families, affine_rejects_cubic_phase) {
    // i^{2 x0 x1 x2} = (-1)^{x0 x1 x2} is a cubic phase.
    std::vector<Scalar> v(8, 1);
    v[7] = -1;
    EXPECT_FALSE(is_affine(Signature(3, v)).has_value());
    // i^{x0 x1} is not of the form l + 2q either.
    EXPECT_FALSE(is_affine(Signature(2, {1, 1, 1, kI})).has_value());
}

TEST(families, affine_and_l_are_tensor_closed) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; t++) {
        Signature f = holant::testing::random_affine(rng, std::uniform_int_distribution<int>(1, 3)(rng));
        Signature g = holant::testing::random_affine(rng, std::uniform_int_distribution<int>(1, 3)(rng));
        ASSERT_TRUE(is_affine(tensor_product(f, g)).has_value());
        if (in_L(f) && in_L(g)) {
            ASSERT_TRUE(in_L(tensor_product(f, g)));
        }
    }
    Signature a = sigs::equality(2), b = Signature(2, {1, 0, 0, kI});
    ASSERT_TRUE(in_L(a) && in_L(b));
    EXPECT_TRUE(in_L(tensor_product(a, b)));
}

TEST(families, l_examples) {
    EXPECT_TRUE(in_L(sigs::equality(2)));
    EXPECT_TRUE(in_L(Signature::ket("00")));
    EXPECT_FALSE(in_L(sym({1, 2, 1})));
    // The twist at 111 turns =3 into |000> + w^3|111>, which is not affine.
    EXPECT_FALSE(in_L(sigs::equality(3)));
    EXPECT_FALSE(in_L(Signature(2, {1, 0, 0, Scalar::zeta()})));
    EXPECT_TRUE(in_L(Signature(2, {1, 0, 0, kI})));
}

TEST(families, cs_examples) {
    EXPECT_TRUE(is_in_cS(Mat2::identity()));
    EXPECT_TRUE(is_in_cS(mats::T()));
    EXPECT_FALSE(is_in_cS(Mat2::diag(1, 2)));
    EXPECT_THROW(is_in_cS(Mat2::diag(1, 0)), HolantError);
}

TEST(families, cs_enumeration_is_complete_on_a_grid) {
    auto all = enumerate_cS();
    for (const auto &s : all) {
        ASSERT_TRUE(is_in_cS(s));
    }
    // Oracle: every matrix with entries in a small set that lies in S must be
    // proportional to an enumerated one.
    std::vector<Scalar> entries{0, 1, -1, kI, -kI, 2, Scalar::zeta(), Scalar::zeta_pow(3), Scalar(1) + kI};
    int found = 0;
    for (const auto &a : entries) {
        for (const auto &b : entries) {
            for (const auto &c : entries) {
                for (const auto &d : entries) {
                    Mat2 m{a, b, c, d};
                    if (!m.is_invertible() || !is_in_cS(m)) {
                        continue;
                    }
                    found++;
                    bool listed = std::any_of(all.begin(), all.end(), [&](const Mat2 &x) { return x.proportional_to(m); });
                    ASSERT_TRUE(listed) << m;
                }
            }
        }
    }
    EXPECT_GT(found, 0);
}

TEST(families, cs_membership_examples) {
    std::vector<Signature> eq3{sigs::equality(3)};
    auto v = exists_S_in_cS(eq3);
    ASSERT_TRUE(v.is_member());
    EXPECT_EQ(*v.transform, Mat2::identity());
    std::vector<Signature> teq3{Signature::ket("000") + Signature::ket("111").scaled(Scalar::zeta_pow(3))};
    auto w = exists_S_in_cS(teq3);
    ASSERT_TRUE(w.is_member());
    EXPECT_EQ(*w.transform, mats::T());
    std::vector<Signature> bad{sym({1, 2, 1})};
    EXPECT_EQ(exists_S_in_cS(bad).member, Membership::NotMember);
    std::vector<Mat2> only_identity{Mat2::identity()};
    EXPECT_EQ(exists_S_in_cS(bad, only_identity, false).member, Membership::Unknown);
}

TEST(families, cs_verdict_is_scale_invariant) {
    std::mt19937_64 rng(47);
    auto cands = default_cS_candidates();
    for (int t = 0; t < 40; t++) {
        const Mat2 &s = cands[static_cast<size_t>(t) % cands.size()];
        std::vector<Signature> set{holographic_transform(s, holant::testing::random_affine(rng, 3))};
        if (t % 4 == 0) {
            set.push_back(holant::testing::random_signature(rng, 2));
            if (set.back().is_zero()) {
                continue;
            }
        }
        auto v = exists_S_in_cS(set);
        if (t % 4) {
            ASSERT_TRUE(v.is_member());
        }
        std::vector<Signature> scaled;
        for (const auto &f : set) {
            scaled.push_back(f.scaled(holant::testing::random_field_element(rng) + Scalar(7)));
        }
        ASSERT_EQ(exists_S_in_cS(scaled).member, v.member);
    }
}

TEST(families, holant_star_examples) {
    std::vector<Signature> kw{holographic_transform(mats::K(), sigs::w_state())};
    auto v = holant_star_tractable(kw);
    ASSERT_TRUE(v.is_member());
    EXPECT_EQ(v.family, "KM");
    std::vector<Signature> hard{sigs::equality(3), sym({1, 2, 1})};
    EXPECT_EQ(holant_star_tractable(hard).member, Membership::NotMember);
    std::vector<Signature> unaries{Signature(1, {1, 2}), Signature(1, {kI, 3})};
    EXPECT_EQ(holant_star_tractable(unaries).family, "T");
    std::vector<Signature> kxw{holographic_transform(mats::KX(), sigs::w_state())};
    EXPECT_EQ(holant_star_tractable(kxw).family, "KXM");
}

TEST(families, omega_examples) {
    auto [f, m] = omega_normalise(sym({1, 0, 1}));
    EXPECT_EQ(f, sym({1, 0, 1}));
    EXPECT_EQ(m, Mat2::identity());
    EXPECT_EQ(omega_normalise(sym({0, 1, 0})).second, Mat2::identity());
    EXPECT_EQ(omega_normalise(Signature(1, {1, 1})).second, Mat2::identity());
    EXPECT_TRUE(is_omega_normalised(Signature(1, {1, Scalar::zeta()})));
    EXPECT_THROW(omega_normalise(Signature::ket("01")), HolantError);
}
