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

#include "holant/io.h"

#include <functional>

#include "gtest/gtest.h"
#include "holant/error.h"
#include "test_util.h"

using namespace holant;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const HolantError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Parse;
}

}  // namespace

TEST(io, signature_formats) {
    Signature f = parse_signature_json(R"({"arity": 2, "values": ["1", "0", 0, "-w^3"]})");
    EXPECT_EQ(f, Signature(2, {1, 0, 0, -Scalar::zeta_pow(3)}));
    Signature g = parse_signature_json(R"({"symmetric": ["1", "2", "1"]})");
    EXPECT_EQ(g, Signature(2, {1, 2, 2, 1}));
    EXPECT_EQ(parse_signature_json(signature_to_json(f)), f);

    EXPECT_EQ(kind_of([] { parse_signature_json(R"({"arity": 2, "values": ["1"]})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_signature_json(R"({"arity": 1, "values": ["1 +"]})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_signature_json(R"({"values": ["1"]})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_signature_json(R"({"arity": "two", "values": []})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_signature_json("{not json"); }), ErrorKind::Parse);
}

TEST(io, set_round_trip) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; t++) {
        std::vector<Signature> set;
        for (int k = 0; k < 3; k++) {
            set.push_back(holant::testing::random_signature(rng, 1 + t % 4));
        }
        EXPECT_EQ(parse_set_json(set_to_json(set)), set);
    }
    auto bare = parse_set_json(R"([{"symmetric": [1, 0, 0, 1]}, {"arity": 1, "values": ["i", 1]}])");
    ASSERT_EQ(bare.size(), 2u);
    EXPECT_EQ(bare[0], sigs::equality(3));
    EXPECT_EQ(kind_of([] { parse_set_json(R"({"signatures": 3})"); }), ErrorKind::Parse);
}

TEST(io, grid_round_trip) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; t++) {
        SignatureGrid g = holant::testing::random_grid(rng, 8);
        if (t % 2) {
            g = make_bipartite(g);
        }
        SignatureGrid back = parse_grid_json(grid_to_json(g));
        ASSERT_EQ(back.vertices().size(), g.vertices().size());
        for (size_t v = 0; v < g.vertices().size(); v++) {
            EXPECT_EQ(back.vertices()[v].sig, g.vertices()[v].sig);
            EXPECT_EQ(back.vertices()[v].side, g.vertices()[v].side);
        }
        EXPECT_EQ(grid_to_json(back), grid_to_json(g));
        EXPECT_EQ(holant_bruteforce(back), holant_bruteforce(g));
    }
}

TEST(io, grid_file_example) {
    // Triangle of =2: two consistent assignments.
    auto g = parse_grid_json(R"({
        "signatures": {"eq2": {"symmetric": ["1", "0", "1"]}},
        "vertices": [{"sig": "eq2"}, {"sig": "eq2"}, {"sig": "eq2"}],
        "edges": [[[0, 1], [1, 0]], [[1, 1], [2, 0]], [[2, 1], [0, 0]]]
    })");
    EXPECT_EQ(holant_contract(g), Scalar(2));
    EXPECT_EQ(kind_of([] { parse_grid_json(R"({"signatures": {}, "vertices": [{"sig": "x"}]})"); }),
              ErrorKind::Parse);
    EXPECT_EQ(kind_of([] {
                  parse_grid_json(R"({"signatures": {"u": {"arity": 1, "values": [1, 1]}},
                      "vertices": [{"sig": "u"}], "side": ["Q"]})");
              }),
              ErrorKind::Parse);
}

TEST(io, matrix_literals) {
    EXPECT_EQ(parse_mat2("K"), mats::K());
    EXPECT_EQ(parse_mat2("KX"), mats::KX());
    EXPECT_EQ(parse_mat2(" I "), Mat2::identity());
    EXPECT_EQ(parse_mat2("[[1, 1], [i, -i]]"), mats::K());
    EXPECT_EQ(parse_mat2("[[1/2 + i, (1 - w)^2], [0, w^3]]"),
              (Mat2{Scalar::parse("1/2 + i"), Scalar::parse("(1 - w)^2"), 0, Scalar::zeta_pow(3)}));
    EXPECT_EQ(parse_mat2(mats::T().str()), mats::T());
    EXPECT_EQ(kind_of([] { parse_mat2("[[1, 2]]"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_mat2("Q"); }), ErrorKind::Parse);

    auto cands = parse_candidates_json(R"(["I", "[[1, 0], [0, w]]", [["1", "1"], ["1", "-1"]]])");
    ASSERT_EQ(cands.size(), 3u);
    EXPECT_EQ(cands[1], mats::T());
    EXPECT_EQ(cands[2], mats::H());
    EXPECT_EQ(parse_candidates_json(R"({"candidates": ["X"]})").at(0), mats::X());
}

TEST(io, certificate_round_trip) {
    std::vector<std::vector<Signature>> sets{
        {sigs::equality(3), Signature::from_symmetric(std::vector<Scalar>{1, 2, 1})},
        {holographic_transform(mats::K(), sigs::w_state()), sigs::equality(3)},
        {Signature(4, {0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, 0, 0, 0, 0})},
    };
    for (const auto &set : sets) {
        auto v = classify_holant_c(set);
        ASSERT_EQ(v.tag, VerdictTag::Hard);
        std::string text = certificate_to_json(v.certificate);
        Certificate back = parse_certificate_json(text);
        EXPECT_EQ(certificate_to_json(back), text);
        EXPECT_TRUE(certificate_verify(back, set).ok);
    }
    EXPECT_EQ(kind_of([] { parse_certificate_json(R"([{"kind": "Teleport"}])"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_certificate_json(R"([{"kind": 3}])"); }), ErrorKind::Parse);
    EXPECT_TRUE(parse_certificate_json(R"({"steps": []})").steps.empty());
}

TEST(io, missing_file) {
    EXPECT_EQ(kind_of([] { read_text_file("/nonexistent/file.json"); }), ErrorKind::Parse);
}
