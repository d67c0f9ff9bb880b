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

#include "holant/tractable_eval.h"

#include <algorithm>

#include "holant/error.h"
#include "holant/families.h"

namespace holant {

namespace {

void require_closed(const SignatureGrid &g, const char *who) {
    g.validate();
    if (!g.dangling().empty()) {
        throw HolantError(ErrorKind::DanglingEdges, std::string(who) + " needs a grid without dangling edges");
    }
}

// One tensor factor of a vertex, with the edge on each of its slots.
struct Node {
    Signature sig;
    std::vector<int> edge;
};

struct FactorGraph {
    std::vector<Node> nodes;
    /// For each edge, its two (node, local slot) ends.
    std::vector<std::array<std::pair<int, int>, 2>> ends;
    bool has_zero = false;
};

FactorGraph split_factors(const SignatureGrid &g) {
    FactorGraph fg;
    std::vector<std::vector<std::pair<int, int>>> where(g.vertices().size());
    for (size_t v = 0; v < g.vertices().size(); v++) {
        const Signature &f = g.vertices()[v].sig;
        where[v].resize(static_cast<size_t>(f.arity()));
        if (f.is_zero()) {
            fg.has_zero = true;
            return fg;
        }
        if (f.arity() == 0) {
            fg.nodes.push_back({f, {}});
            continue;
        }
        for (const auto &fac : tensor_factorize(f)) {
            int id = static_cast<int>(fg.nodes.size());
            for (size_t k = 0; k < fac.slots.size(); k++) {
                where[v][static_cast<size_t>(fac.slots[k])] = {id, static_cast<int>(k)};
            }
            fg.nodes.push_back({fac.sig, std::vector<int>(fac.slots.size(), -1)});
        }
    }
    for (size_t e = 0; e < g.edges().size(); e++) {
        const Edge &edge = g.edges()[e];
        auto a = where[static_cast<size_t>(edge.a.vertex)][static_cast<size_t>(edge.a.slot)];
        auto b = where[static_cast<size_t>(edge.b.vertex)][static_cast<size_t>(edge.b.slot)];
        fg.nodes[static_cast<size_t>(a.first)].edge[static_cast<size_t>(a.second)] = static_cast<int>(e);
        fg.nodes[static_cast<size_t>(b.first)].edge[static_cast<size_t>(b.second)] = static_cast<int>(e);
        fg.ends.push_back({a, b});
    }
    return fg;
}

// The end of edge e that is not (node, slot).
std::pair<int, int> other_end(const FactorGraph &fg, int e, int node, int slot) {
    const auto &ends = fg.ends[static_cast<size_t>(e)];
    return ends[0] == std::pair{node, slot} ? ends[1] : ends[0];
}

using Vec2 = std::array<Scalar, 2>;

// Pushes a vector on the entering slot's edge through a binary node.
Vec2 through(const Signature &b, int entering, const Vec2 &in) {
    Vec2 out{0, 0};
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            size_t idx = entering == 0 ? static_cast<size_t>(2 * x + y) : static_cast<size_t>(2 * y + x);
            out[static_cast<size_t>(y)] += in[static_cast<size_t>(x)] * b[idx];
        }
    }
    return out;
}

}  // namespace

Scalar eval_T_closure(const SignatureGrid &g) {
    require_closed(g, "eval_T_closure");
    FactorGraph fg = split_factors(g);
    if (fg.has_zero) {
        return 0;
    }
    for (size_t n = 0; n < fg.nodes.size(); n++) {
        if (fg.nodes[n].sig.arity() > 2) {
            throw HolantError(ErrorKind::NotInFamily, "a factor of arity " + std::to_string(fg.nodes[n].sig.arity()) +
                                                          " lies outside the T closure");
        }
    }
    Scalar total = 1;
    std::vector<bool> seen(fg.nodes.size(), false);
    // Walks from (node, leaving slot) carrying `vec`, until a unary end or
    // back to `stop`; returns the final vector and the last node reached.
    auto walk = [&](int node, int leave, Vec2 vec, int stop, bool &closed) {
        closed = false;
        while (true) {
            auto [next, enter] = other_end(fg, fg.nodes[static_cast<size_t>(node)].edge[static_cast<size_t>(leave)], node, leave);
            const Signature &s = fg.nodes[static_cast<size_t>(next)].sig;
            if (next == stop && enter == 0) {
                closed = true;
                return vec;
            }
            seen[static_cast<size_t>(next)] = true;
            if (s.arity() == 1) {
                return Vec2{vec[0] * s[0] + vec[1] * s[1], 0};
            }
            vec = through(s, enter, vec);
            node = next;
            leave = 1 - enter;
        }
    };
    // Paths first, starting from unary ends.
    for (size_t n = 0; n < fg.nodes.size(); n++) {
        const Node &node = fg.nodes[n];
        if (seen[n] || node.sig.arity() != 1) {
            continue;
        }
        seen[n] = true;
        bool closed = false;
        total *= walk(static_cast<int>(n), 0, Vec2{node.sig[0], node.sig[1]}, -1, closed)[0];
    }
    // Whatever remains is a union of cycles of binary nodes.
    for (size_t n = 0; n < fg.nodes.size(); n++) {
        const Node &node = fg.nodes[n];
        if (seen[n]) {
            continue;
        }
        seen[n] = true;
        if (node.sig.arity() == 0) {
            total *= node.sig[0];
            continue;
        }
        Scalar trace = 0;
        for (int start = 0; start < 2; start++) {
            // Row `start` of the cycle's matrix product, read at `start`.
            Vec2 row{node.sig[static_cast<size_t>(2 * start)], node.sig[static_cast<size_t>(2 * start + 1)]};
            bool closed = false;
            Vec2 end = walk(static_cast<int>(n), 1, row, static_cast<int>(n), closed);
            trace += end[static_cast<size_t>(start)];
        }
        total *= trace;
    }
    return total;
}

Scalar eval_E_closure(const SignatureGrid &g, const std::optional<Mat2> &m) {
    require_closed(g, "eval_E_closure");
    if (m) {
        SignatureGrid bip = g.has_sides() ? g : make_bipartite(g);
        return eval_E_closure(transform_bipartite(bip, m->inverse()));
    }
    FactorGraph fg = split_factors(g);
    if (fg.has_zero) {
        return 0;
    }
    for (const auto &node : fg.nodes) {
        if (node.sig.arity() > 0 && !in_E(node.sig)) {
            throw HolantError(ErrorKind::NotInFamily, "factor " + node.sig.str() + " is not in E");
        }
    }
    // Connected components of the factor graph.
    std::vector<int> component(fg.nodes.size(), -1);
    int components = 0;
    for (size_t root = 0; root < fg.nodes.size(); root++) {
        if (component[root] >= 0) {
            continue;
        }
        std::vector<int> stack{static_cast<int>(root)};
        component[root] = components;
        while (!stack.empty()) {
            int n = stack.back();
            stack.pop_back();
            const Node &node = fg.nodes[static_cast<size_t>(n)];
            for (int k = 0; k < node.sig.arity(); k++) {
                int next = other_end(fg, node.edge[static_cast<size_t>(k)], n, k).first;
                if (component[static_cast<size_t>(next)] < 0) {
                    component[static_cast<size_t>(next)] = components;
                    stack.push_back(next);
                }
            }
        }
        components++;
    }
    Scalar total = 1;
    std::vector<bool> started(static_cast<size_t>(components), false);
    for (size_t root = 0; root < fg.nodes.size(); root++) {
        if (started[static_cast<size_t>(component[root])]) {
            continue;
        }
        started[static_cast<size_t>(component[root])] = true;
        if (fg.nodes[root].sig.arity() == 0) {
            total *= fg.nodes[root].sig[0];
            continue;
        }
        // Fixing one edge bit forces the rest through each factor's support.
        Scalar sum = 0;
        for (int first = 0; first < 2; first++) {
            std::vector<int> bit(g.edges().size(), -1);
            bit[static_cast<size_t>(fg.nodes[root].edge[0])] = first;
            std::vector<int> stack{static_cast<int>(root)};
            std::vector<bool> queued(fg.nodes.size(), false);
            queued[root] = true;
            Scalar prod = 1;
            while (!stack.empty() && !prod.is_zero()) {
                int n = stack.back();
                stack.pop_back();
                const Node &node = fg.nodes[static_cast<size_t>(n)];
                int arity = node.sig.arity();
                int known = 0;
                while (bit[static_cast<size_t>(node.edge[static_cast<size_t>(known)])] < 0) {
                    known++;
                }
                // The support is x or its complement; pick the one matching.
                size_t x = node.sig.support().front();
                if (node.sig.bit(x, known) != bit[static_cast<size_t>(node.edge[static_cast<size_t>(known)])]) {
                    x ^= node.sig.size() - 1;
                }
                prod *= node.sig[x];
                for (int k = 0; k < arity && !prod.is_zero(); k++) {
                    int e = node.edge[static_cast<size_t>(k)];
                    int want = node.sig.bit(x, k);
                    if (bit[static_cast<size_t>(e)] >= 0 && bit[static_cast<size_t>(e)] != want) {
                        prod = 0;
                        break;
                    }
                    bit[static_cast<size_t>(e)] = want;
                    int next = other_end(fg, e, n, k).first;
                    if (!queued[static_cast<size_t>(next)]) {
                        queued[static_cast<size_t>(next)] = true;
                        stack.push_back(next);
                    }
                }
            }
            sum += prod;
        }
        total *= sum;
        if (total.is_zero()) {
            return 0;
        }
    }
    return total;
}

Scalar z4_gauss_sum(int c0, std::vector<int> linear, std::vector<std::vector<int>> quadratic) {
    size_t n = linear.size();
    auto mod4 = [](int v) { return ((v % 4) + 4) % 4; };
    std::vector<std::vector<char>> q(n, std::vector<char>(n, 0));
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            q[a][b] = q[b][a] = static_cast<char>(quadratic[a][b] & 1);
        }
    }
    std::vector<bool> alive(n, true);
    Scalar factor = 1;
    const Scalar i = Scalar::imag();
    auto remove = [&](size_t v) {
        alive[v] = false;
        for (size_t w = 0; w < n; w++) {
            q[v][w] = q[w][v] = 0;
        }
    };
    auto toggle_pairs = [&](const std::vector<size_t> &set) {
        for (size_t a = 0; a < set.size(); a++) {
            for (size_t b = a + 1; b < set.size(); b++) {
                q[set[a]][set[b]] ^= 1;
                q[set[b]][set[a]] ^= 1;
            }
        }
    };
    for (size_t v = 0; v < n; v++) {
        if (!alive[v]) {
            continue;
        }
        std::vector<size_t> nb;
        for (size_t w = 0; w < n; w++) {
            if (w != v && alive[w] && q[v][w]) {
                nb.push_back(w);
            }
        }
        int lv = mod4(linear[v]);
        if (nb.empty()) {
            factor *= Scalar(1) + i.pow(lv);
            remove(v);
            if (factor.is_zero()) {
                return 0;
            }
            continue;
        }
        remove(v);
        if (lv % 2) {
            // 1 + i^{lv} (-1)^s = (1 +- i) i^{(4-lv) s}, s the XOR of nb.
            factor *= lv == 1 ? Scalar(1) + i : Scalar(1) - i;
            for (size_t w : nb) {
                linear[w] += 4 - lv;
            }
            toggle_pairs(nb);
            continue;
        }
        // Summing x_v forces x_w0 = b + XOR of the other neighbours.
        factor *= 2;
        int b = lv / 2;
        size_t w0 = nb.front();
        std::vector<size_t> rest(nb.begin() + 1, nb.end());
        int lw = mod4(linear[w0]);
        linear[w0] = 0;
        std::vector<size_t> cross;
        for (size_t x = 0; x < n; x++) {
            if (x != w0 && alive[x] && q[w0][x]) {
                cross.push_back(x);
            }
        }
        remove(w0);
        c0 += lw * b;
        for (size_t w : rest) {
            linear[w] += lw * (b ? 3 : 1);
        }
        if (lw % 2) {
            toggle_pairs(rest);
        }
        for (size_t x : cross) {
            linear[x] += 2 * b;
            for (size_t w : rest) {
                if (w == x) {
                    linear[x] += 2;
                } else {
                    q[w][x] ^= 1;
                    q[x][w] ^= 1;
                }
            }
        }
    }
    return factor * i.pow(mod4(c0));
}

Scalar eval_affine(const SignatureGrid &g) {
    require_closed(g, "eval_affine");
    size_t edges = g.edges().size();
    std::vector<std::vector<int>> edge_of(g.vertices().size());
    for (size_t v = 0; v < g.vertices().size(); v++) {
        edge_of[v].assign(static_cast<size_t>(g.vertices()[v].sig.arity()), -1);
    }
    for (size_t e = 0; e < edges; e++) {
        const Edge &edge = g.edges()[e];
        edge_of[static_cast<size_t>(edge.a.vertex)][static_cast<size_t>(edge.a.slot)] = static_cast<int>(e);
        edge_of[static_cast<size_t>(edge.b.vertex)][static_cast<size_t>(edge.b.slot)] = static_cast<int>(e);
    }
    // Variables: one per edge, then one per support constraint, which is
    // written as (1/2) sum_y (-1)^{y (a.x + c)}.
    std::vector<int> linear(edges, 0);
    std::vector<std::pair<std::vector<int>, int>> constraints;
    std::vector<std::pair<int, int>> doubled;  // 2 x_a x_b terms
    Scalar prefactor = 1;
    int c0 = 0;
    for (size_t v = 0; v < g.vertices().size(); v++) {
        const Signature &f = g.vertices()[v].sig;
        if (f.is_zero()) {
            return 0;
        }
        if (f.arity() == 0) {
            prefactor *= f[0];
            continue;
        }
        auto form = is_affine(f);
        if (!form) {
            throw HolantError(ErrorKind::NotInFamily, "vertex " + std::to_string(v) + " is not affine");
        }
        int n = f.arity();
        prefactor *= form->prefactor;
        auto var_of_bit = [&](int bit) { return edge_of[v][static_cast<size_t>(n - 1 - bit)]; };
        for (int j = 0; j < form->rank(); j++) {
            linear[static_cast<size_t>(var_of_bit(form->pivots[static_cast<size_t>(j)]))] +=
                form->linear[static_cast<size_t>(j)];
            for (int k = j + 1; k < form->rank(); k++) {
                if (form->quadratic[static_cast<size_t>(j)][static_cast<size_t>(k)] & 1) {
                    doubled.emplace_back(var_of_bit(form->pivots[static_cast<size_t>(j)]),
                                         var_of_bit(form->pivots[static_cast<size_t>(k)]));
                }
            }
        }
        for (int bit = 0; bit < n; bit++) {
            if (std::find(form->pivots.begin(), form->pivots.end(), bit) != form->pivots.end()) {
                continue;
            }
            std::vector<int> vars{var_of_bit(bit)};
            for (int j = 0; j < form->rank(); j++) {
                if ((form->basis[static_cast<size_t>(j)] >> bit) & 1) {
                    vars.push_back(var_of_bit(form->pivots[static_cast<size_t>(j)]));
                }
            }
            constraints.emplace_back(vars, static_cast<int>((form->offset >> bit) & 1));
        }
    }
    size_t total = edges + constraints.size();
    linear.resize(total, 0);
    std::vector<std::vector<int>> quad(total, std::vector<int>(total, 0));
    for (auto [a, b] : doubled) {
        if (a == b) {
            linear[static_cast<size_t>(a)] += 2;
        } else {
            quad[static_cast<size_t>(std::min(a, b))][static_cast<size_t>(std::max(a, b))] ^= 1;
        }
    }
    for (size_t c = 0; c < constraints.size(); c++) {
        size_t y = edges + c;
        linear[y] += 2 * constraints[c].second;
        for (int x : constraints[c].first) {
            quad[static_cast<size_t>(x)][y] ^= 1;
        }
        prefactor = prefactor / Scalar(2);
    }
    return prefactor * z4_gauss_sum(c0, std::move(linear), std::move(quad));
}

FamilyEvaluation eval_by_family(const SignatureGrid &g) {
    bool all_t = true, all_e = true, all_a = true;
    for (const auto &v : g.vertices()) {
        if (v.sig.is_zero() || v.sig.arity() == 0) {
            continue;
        }
        all_t = all_t && in_T(v.sig);
        auto factors = tensor_factorize(v.sig);
        all_e = all_e && std::all_of(factors.begin(), factors.end(), [](const Factor &f) { return in_E(f.sig); });
        all_a = all_a && is_affine(v.sig).has_value();
    }
    if (all_t) {
        return {eval_T_closure(g), "T"};
    }
    if (all_e) {
        return {eval_E_closure(g), "E"};
    }
    if (all_a) {
        return {eval_affine(g), "A"};
    }
    throw HolantError(ErrorKind::NotInFamily, "no polynomial-time evaluator applies to this grid");
}

}  // namespace holant
