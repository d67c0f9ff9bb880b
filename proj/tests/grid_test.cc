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

#include "holant/grid.h"

#include "gtest/gtest.h"
#include "holant/error.h"
#include "test_util.h"

using namespace holant;
using holant::testing::random_grid;

namespace {

SignatureGrid cycle_of(const Signature &binary, int k) {
    SignatureGrid g;
    for (int v = 0; v < k; v++) {
        g.add_vertex(binary);
    }
    for (int v = 0; v < k; v++) {
        g.connect(Endpoint{v, 1}, Endpoint{(v + 1) % k, 0});
    }
    return g;
}

SignatureGrid complete_k4(const Signature &f) {
    SignatureGrid g;
    for (int v = 0; v < 4; v++) {
        g.add_vertex(f);
    }
    int next[4] = {0, 0, 0, 0};
    for (int u = 0; u < 4; u++) {
        for (int v = u + 1; v < 4; v++) {
            g.connect(Endpoint{u, next[u]++}, Endpoint{v, next[v]++});
        }
    }
    return g;
}

// Independent oracle: number of perfect matchings of a small graph.
int count_perfect_matchings(int n, const std::vector<std::pair<int, int>> &edges) {
    int count = 0;
    for (size_t mask = 0; mask < (size_t{1} << edges.size()); mask++) {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < edges.size(); k++) {
            if (mask >> k & 1) {
                deg[static_cast<size_t>(edges[k].first)]++;
                deg[static_cast<size_t>(edges[k].second)]++;
            }
        }
        count += std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    }
    return count;
}

}  // namespace

TEST(grid, triangle_of_equalities) {
    auto g = cycle_of(sigs::equality(2), 3);
    EXPECT_EQ(holant_bruteforce(g), Scalar(2));
    EXPECT_EQ(holant_contract(g), Scalar(2));
}

TEST(grid, k4_exact_one_counts_perfect_matchings) {
    auto g = complete_k4(sigs::w_state());
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : g.edges()) {
        edges.emplace_back(e.a.vertex, e.b.vertex);
    }
    EXPECT_EQ(count_perfect_matchings(4, edges), 3);
    EXPECT_EQ(holant_bruteforce(g), Scalar(3));
    EXPECT_EQ(holant_contract(g), Scalar(3));
}

TEST(grid, two_unaries_cancel) {
    SignatureGrid g;
    Signature u(1, {1, Scalar::imag()});
    g.add_vertex(u);
    g.add_vertex(u);
    g.connect({0, 0}, {1, 0});
    EXPECT_EQ(holant_bruteforce(g), Scalar(0));
}

TEST(grid, empty_grid_is_one) {
    SignatureGrid g;
    EXPECT_EQ(holant_bruteforce(g), Scalar(1));
    EXPECT_EQ(holant_contract(g), Scalar(1));
}

TEST(grid, path_matches_matrix_chain) {
    // Nine [1,2,1] vertices capped by |0> at both ends: entry (0,0) of M^9.
    Signature m = Signature::from_symmetric(std::vector<Scalar>{1, 2, 1});
    SignatureGrid g;
    int left = g.add_vertex(sigs::delta0());
    std::vector<int> chain;
    for (int k = 0; k < 9; k++) {
        chain.push_back(g.add_vertex(m));
    }
    int right = g.add_vertex(sigs::delta0());
    g.connect({left, 0}, {chain[0], 0});
    for (int k = 0; k + 1 < 9; k++) {
        g.connect({chain[static_cast<size_t>(k)], 1}, {chain[static_cast<size_t>(k) + 1], 0});
    }
    g.connect({chain.back(), 1}, {right, 0});
    // Oracle: 2x2 integer matrix power.
    long a = 1, b = 0, c = 0, d = 1;
    for (int k = 0; k < 9; k++) {
        long na = a * 1 + b * 2, nb = a * 2 + b * 1, nc = c * 1 + d * 2, nd = c * 2 + d * 1;
        a = na, b = nb, c = nc, d = nd;
    }
    EXPECT_EQ(a, 9841);
    EXPECT_EQ(holant_contract(g), Scalar(a));
    EXPECT_EQ(holant_bruteforce(g), Scalar(a));
}

TEST(grid, gadget_examples) {
    SignatureGrid pinned;
    pinned.add_vertex(sigs::equality(3));
    pinned.add_vertex(sigs::delta0());
    pinned.connect({0, 2}, {1, 0});
    pinned.add_dangling({0, 0});
    pinned.add_dangling({0, 1});
    EXPECT_EQ(gadget_signature(pinned), Signature::ket("00"));

    SignatureGrid tri;
    for (int v = 0; v < 3; v++) {
        tri.add_vertex(sigs::equality(3));
    }
    tri.connect({0, 1}, {1, 0});
    tri.connect({1, 1}, {2, 0});
    tri.connect({2, 1}, {0, 0});
    for (int v = 0; v < 3; v++) {
        tri.add_dangling({v, 2});
    }
    EXPECT_EQ(gadget_signature(tri), sigs::equality(3));
    EXPECT_EQ(gadget_signature_bruteforce(tri), sigs::equality(3));

    SignatureGrid single;
    single.add_vertex(sigs::equality(2));
    single.add_dangling({0, 0});
    single.add_dangling({0, 1});
    EXPECT_EQ(gadget_signature(single), sigs::equality(2));
    single.vertex(0).sig = Signature::ket("01");
    EXPECT_EQ(gadget_signature(single), Signature::ket("01"));
}

TEST(grid, dangling_order_controls_slot_order) {
    SignatureGrid g;
    g.add_vertex(Signature::ket("01"));
    g.add_dangling({0, 1});
    g.add_dangling({0, 0});
    EXPECT_EQ(gadget_signature(g), Signature::ket("10"));
    EXPECT_EQ(gadget_signature_bruteforce(g), Signature::ket("10"));
}

TEST(grid, validation_errors) {
    SignatureGrid g;
    g.add_vertex(sigs::equality(2));
    g.connect({0, 0}, {0, 0});
    EXPECT_THROW(g.validate(), HolantError);
    SignatureGrid h;
    h.add_vertex(sigs::equality(2));
    h.add_dangling({0, 0});
    EXPECT_THROW(h.validate(), HolantError);
    h.add_dangling({0, 1});
    try {
        holant_bruteforce(h);
        FAIL();
    } catch (const HolantError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DanglingEdges);
    }
}

TEST(grid, edge_limit) {
    auto g = cycle_of(sigs::equality(2), 25);
    try {
        holant_bruteforce(g);
        FAIL();
    } catch (const HolantError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::EdgeLimit);
    }
    EXPECT_EQ(holant_contract(g), Scalar(2));
}

TEST(grid, self_loop_equals_gadget_with_equality_edge) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; t++) {
        Signature f = holant::testing::random_signature(rng, 4);
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) {
                SignatureGrid g;
                g.add_vertex(f);
                g.add_vertex(sigs::equality(2));
                g.connect({0, i}, {1, 0});
                g.connect({0, j}, {1, 1});
                for (int s = 0; s < 4; s++) {
                    if (s != i && s != j) {
                        g.add_dangling({0, s});
                    }
                }
                ASSERT_EQ(gadget_signature_bruteforce(g), self_loop(f, i, j));
            }
        }
    }
}

TEST(grid, contract_matches_bruteforce_random) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 150; t++) {
        auto g = random_grid(rng);
        ASSERT_EQ(holant_contract(g), holant_bruteforce(g)) << "grid " << t;
    }
}

TEST(grid, make_bipartite_preserves_holant) {
    std::mt19937_64 rng(2);
    auto tri = make_bipartite(cycle_of(sigs::equality(2), 3));
    EXPECT_EQ(tri.vertices().size(), 6u);
    EXPECT_EQ(holant_bruteforce(tri), Scalar(2));
    EXPECT_EQ(holant_bruteforce(make_bipartite(complete_k4(sigs::w_state()))), Scalar(3));
    EXPECT_TRUE(make_bipartite(SignatureGrid{}).vertices().empty());
    for (int t = 0; t < 40; t++) {
        auto g = random_grid(rng, 8);
        auto b = make_bipartite(g);
        b.validate();
        ASSERT_EQ(holant_contract(b), holant_bruteforce(g));
    }
}

TEST(grid, valiant_invariance_random) {
    std::mt19937_64 rng(4);
    std::vector<Mat2> fixed{Mat2::identity(), mats::K(), mats::T()};
    for (int t = 0; t < 60; t++) {
        auto b = make_bipartite(random_grid(rng, 6));
        Scalar before = holant_contract(b);
        Mat2 m = t < 3 ? fixed[static_cast<size_t>(t)] : holant::testing::random_invertible(rng);
        auto tb = transform_bipartite(b, m);
        ASSERT_EQ(holant_contract(tb), before);
        if (t == 0) {
            for (size_t v = 0; v < b.vertices().size(); v++) {
                ASSERT_EQ(tb.vertices()[v].sig, b.vertices()[v].sig);
            }
        }
    }
    EXPECT_THROW(transform_bipartite(make_bipartite(cycle_of(sigs::equality(2), 2)), Mat2::diag(1, 0)), HolantError);
}

TEST(grid, collapse_subgrid_preserves_holant) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 60; t++) {
        auto g = random_grid(rng);
        int nv = static_cast<int>(g.vertices().size());
        std::vector<int> subset;
        for (int v = 0; v < nv; v++) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                subset.push_back(v);
            }
        }
        if (subset.empty()) {
            continue;
        }
        auto h = collapse_subgrid(g, subset);
        h.validate();
        ASSERT_EQ(holant_bruteforce(h), holant_bruteforce(g));
    }
}
