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

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "holant/error.h"

namespace holant {

int SignatureGrid::add_vertex(Signature sig, Side side, std::string name) {
    vertices_.push_back(Vertex{std::move(sig), side, std::move(name)});
    return static_cast<int>(vertices_.size()) - 1;
}

void SignatureGrid::connect(Endpoint a, Endpoint b) {
    edges_.push_back(Edge{a, b});
}

void SignatureGrid::add_dangling(Endpoint e) {
    dangling_.push_back(e);
}

bool SignatureGrid::has_sides() const {
    return !vertices_.empty() &&
           std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex &v) { return v.side != Side::None; });
}

void SignatureGrid::validate() const {
    auto fail = [](const std::string &msg) { throw HolantError(ErrorKind::InvalidGrid, msg); };
    std::vector<std::vector<int>> used(vertices_.size());
    for (size_t v = 0; v < vertices_.size(); v++) {
        used[v].assign(static_cast<size_t>(vertices_[v].sig.arity()), 0);
    }
    auto mark = [&](const Endpoint &e) {
        if (e.vertex < 0 || static_cast<size_t>(e.vertex) >= vertices_.size()) {
            fail("endpoint refers to missing vertex " + std::to_string(e.vertex));
        }
        auto &slots = used[static_cast<size_t>(e.vertex)];
        if (e.slot < 0 || static_cast<size_t>(e.slot) >= slots.size()) {
            fail("vertex " + std::to_string(e.vertex) + " has no slot " + std::to_string(e.slot));
        }
        if (slots[static_cast<size_t>(e.slot)]++) {
            fail("endpoint (" + std::to_string(e.vertex) + ", " + std::to_string(e.slot) + ") used twice");
        }
    };
    for (const auto &e : edges_) {
        mark(e.a);
        mark(e.b);
    }
    for (const auto &e : dangling_) {
        mark(e);
    }
    for (size_t v = 0; v < used.size(); v++) {
        for (size_t s = 0; s < used[v].size(); s++) {
            if (!used[v][s]) {
                fail("endpoint (" + std::to_string(v) + ", " + std::to_string(s) + ") is unmatched");
            }
        }
    }
    bool any_side = std::any_of(vertices_.begin(), vertices_.end(), [](const Vertex &v) { return v.side != Side::None; });
    if (any_side) {
        if (!has_sides()) {
            fail("bipartition tags must be given for every vertex or none");
        }
        for (const auto &e : edges_) {
            if (vertex(e.a.vertex).side == vertex(e.b.vertex).side) {
                fail("edge joins two vertices on the same side");
            }
        }
    }
}

namespace {

// Depth-first enumeration of edge bits. A vertex's factor is multiplied in
// as soon as its last edge has been assigned, so zero entries prune early.
class BruteForce {
   public:
    explicit BruteForce(const SignatureGrid &g) : g_(g) {
        size_t nv = g.vertices().size();
        index_.assign(nv, 0);
        complete_at_.assign(g.edges().size() + 1, {});
        std::vector<int> last(nv, -1);
        for (size_t k = 0; k < g.edges().size(); k++) {
            last[static_cast<size_t>(g.edges()[k].a.vertex)] = static_cast<int>(k);
            last[static_cast<size_t>(g.edges()[k].b.vertex)] = static_cast<int>(k);
        }
        for (size_t v = 0; v < nv; v++) {
            complete_at_[static_cast<size_t>(last[v] + 1)].push_back(static_cast<int>(v));
        }
    }

    Scalar run(const std::vector<int> &dangling_bits) {
        std::fill(index_.begin(), index_.end(), 0);
        for (size_t j = 0; j < dangling_bits.size(); j++) {
            set_bit(g_.dangling()[j], dangling_bits[j]);
        }
        Scalar acc;
        Scalar start(1);
        if (!absorb(0, start)) {
            return acc;
        }
        recurse(0, start, acc);
        return acc;
    }

   private:
    void set_bit(const Endpoint &e, int bit) {
        int n = g_.vertex(e.vertex).sig.arity();
        size_t mask = size_t{1} << (n - 1 - e.slot);
        size_t &idx = index_[static_cast<size_t>(e.vertex)];
        idx = bit ? (idx | mask) : (idx & ~mask);
    }

    bool absorb(size_t stage, Scalar &prod) {
        for (int v : complete_at_[stage]) {
            const Scalar &val = g_.vertex(v).sig[index_[static_cast<size_t>(v)]];
            if (val.is_zero()) {
                return false;
            }
            prod *= val;
        }
        return true;
    }

    void recurse(size_t k, const Scalar &prod, Scalar &acc) {
        if (k == g_.edges().size()) {
            acc += prod;
            return;
        }
        const Edge &e = g_.edges()[k];
        for (int bit = 0; bit < 2; bit++) {
            set_bit(e.a, bit);
            set_bit(e.b, bit);
            Scalar next = prod;
            if (absorb(k + 1, next)) {
                recurse(k + 1, next, acc);
            }
        }
        set_bit(e.a, 0);
        set_bit(e.b, 0);
    }

    const SignatureGrid &g_;
    std::vector<size_t> index_;
    std::vector<std::vector<int>> complete_at_;
};

struct Tensor {
    std::vector<int> labels;
    Signature values;
};

// Contracts all labels shared by a and b; result labels are a's free labels
// followed by b's free labels.
Tensor contract_pair(const Tensor &a, const Tensor &b) {
    std::vector<int> shared, a_free, b_free;
    for (int l : a.labels) {
        (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end() ? shared : a_free).push_back(l);
    }
    for (int l : b.labels) {
        if (std::find(shared.begin(), shared.end(), l) == shared.end()) {
            b_free.push_back(l);
        }
    }
    int result_arity = static_cast<int>(a_free.size() + b_free.size());
    if (result_arity > kMaxArity) {
        throw HolantError(ErrorKind::ContractionOverflow,
                          "intermediate tensor of arity " + std::to_string(result_arity) + " exceeds 16");
    }
    // Reorder a to (free, shared) and b to (shared, free); then it is a matrix product.
    auto reorder = [](const Tensor &t, const std::vector<int> &order) {
        std::vector<int> perm(t.labels.size());
        for (size_t j = 0; j < t.labels.size(); j++) {
            perm[j] = static_cast<int>(std::find(order.begin(), order.end(), t.labels[j]) - order.begin());
        }
        return permute_inputs(t.values, perm);
    };
    std::vector<int> a_order = a_free, b_order = shared;
    a_order.insert(a_order.end(), shared.begin(), shared.end());
    b_order.insert(b_order.end(), b_free.begin(), b_free.end());
    Signature av = reorder(a, a_order);
    Signature bv = reorder(b, b_order);
    size_t s = size_t{1} << shared.size();
    size_t rows = size_t{1} << a_free.size();
    size_t cols = size_t{1} << b_free.size();
    std::vector<Scalar> out(rows * cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t k = 0; k < s; k++) {
            const Scalar &x = av[r * s + k];
            if (x.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < cols; c++) {
                const Scalar &y = bv[k * cols + c];
                if (!y.is_zero()) {
                    out[r * cols + c] += x * y;
                }
            }
        }
    }
    std::vector<int> labels = a_free;
    labels.insert(labels.end(), b_free.begin(), b_free.end());
    return Tensor{std::move(labels), Signature(result_arity, std::move(out))};
}

// Removes a label that occurs twice in one tensor (a self-loop).
void close_loops(Tensor &t) {
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < t.labels.size() && !again; i++) {
            for (size_t j = i + 1; j < t.labels.size(); j++) {
                if (t.labels[i] == t.labels[j]) {
                    t.values = self_loop(t.values, static_cast<int>(i), static_cast<int>(j));
                    t.labels.erase(t.labels.begin() + static_cast<long>(j));
                    t.labels.erase(t.labels.begin() + static_cast<long>(i));
                    again = true;
                    break;
                }
            }
        }
    }
}

Signature contract_all(const SignatureGrid &g) {
    g.validate();
    if (g.dangling().size() > static_cast<size_t>(kMaxArity)) {
        throw HolantError(ErrorKind::EdgeLimit, "more than 16 dangling edges");
    }
    const int open_base = static_cast<int>(g.edges().size());
    std::vector<Tensor> ts;
    for (const auto &v : g.vertices()) {
        ts.push_back(Tensor{std::vector<int>(static_cast<size_t>(v.sig.arity()), -1), v.sig});
    }
    for (size_t k = 0; k < g.edges().size(); k++) {
        const Edge &e = g.edges()[k];
        ts[static_cast<size_t>(e.a.vertex)].labels[static_cast<size_t>(e.a.slot)] = static_cast<int>(k);
        ts[static_cast<size_t>(e.b.vertex)].labels[static_cast<size_t>(e.b.slot)] = static_cast<int>(k);
    }
    for (size_t j = 0; j < g.dangling().size(); j++) {
        const Endpoint &e = g.dangling()[j];
        ts[static_cast<size_t>(e.vertex)].labels[static_cast<size_t>(e.slot)] = open_base + static_cast<int>(j);
    }
    for (auto &t : ts) {
        close_loops(t);
    }
    if (ts.empty()) {
        ts.push_back(Tensor{{}, Signature()});
    }
    while (ts.size() > 1) {
        std::optional<std::pair<size_t, size_t>> best;
        size_t best_arity = 0;
        for (size_t i = 0; i < ts.size(); i++) {
            for (size_t j = i + 1; j < ts.size(); j++) {
                size_t shared = 0;
                for (int l : ts[i].labels) {
                    shared += static_cast<size_t>(std::count(ts[j].labels.begin(), ts[j].labels.end(), l));
                }
                if (shared == 0) {
                    continue;
                }
                size_t arity = ts[i].labels.size() + ts[j].labels.size() - 2 * shared;
                if (!best || arity < best_arity) {
                    best = {i, j};
                    best_arity = arity;
                }
            }
        }
        auto [i, j] = best.value_or(std::pair<size_t, size_t>{0, 1});
        ts[i] = contract_pair(ts[i], ts[j]);
        ts.erase(ts.begin() + static_cast<long>(j));
    }
    Tensor &t = ts.front();
    std::vector<int> perm(t.labels.size());
    for (size_t j = 0; j < t.labels.size(); j++) {
        perm[j] = t.labels[j] - open_base;
    }
    return permute_inputs(t.values, perm);
}

}  // namespace

Scalar holant_bruteforce(const SignatureGrid &g) {
    g.validate();
    if (!g.dangling().empty()) {
        throw HolantError(ErrorKind::DanglingEdges, "holant needs a grid without dangling edges");
    }
    if (g.edges().size() > static_cast<size_t>(kBruteForceEdgeLimit)) {
        throw HolantError(ErrorKind::EdgeLimit,
                          std::to_string(g.edges().size()) + " edges exceed the brute-force limit of 24");
    }
    return BruteForce(g).run({});
}

Scalar holant_contract(const SignatureGrid &g) {
    if (!g.dangling().empty()) {
        throw HolantError(ErrorKind::DanglingEdges, "holant needs a grid without dangling edges");
    }
    return contract_all(g)[0];
}

Signature gadget_signature(const SignatureGrid &g) {
    return contract_all(g);
}

Signature gadget_signature_bruteforce(const SignatureGrid &g) {
    g.validate();
    int n = static_cast<int>(g.dangling().size());
    if (n > kMaxArity || g.edges().size() > static_cast<size_t>(kBruteForceEdgeLimit)) {
        throw HolantError(ErrorKind::EdgeLimit, "gadget too large for enumeration");
    }
    BruteForce bf(g);
    std::vector<Scalar> values(size_t{1} << n);
    std::vector<int> bits(static_cast<size_t>(n));
    for (size_t x = 0; x < values.size(); x++) {
        for (int j = 0; j < n; j++) {
            bits[static_cast<size_t>(j)] = static_cast<int>((x >> (n - 1 - j)) & 1);
        }
        values[x] = bf.run(bits);
    }
    return Signature(n, std::move(values));
}

SignatureGrid make_bipartite(const SignatureGrid &g) {
    g.validate();
    SignatureGrid out;
    for (const auto &v : g.vertices()) {
        out.add_vertex(v.sig, Side::L, v.name);
    }
    for (const auto &e : g.edges()) {
        int mid = out.add_vertex(sigs::equality(2), Side::R, "=2");
        out.connect(e.a, Endpoint{mid, 0});
        out.connect(Endpoint{mid, 1}, e.b);
    }
    for (const auto &d : g.dangling()) {
        out.add_dangling(d);
    }
    return out;
}

SignatureGrid transform_bipartite(const SignatureGrid &g, const Mat2 &m) {
    g.validate();
    if (!g.vertices().empty() && !g.has_sides()) {
        throw HolantError(ErrorKind::InvalidGrid, "transform_bipartite needs bipartition tags");
    }
    Mat2 right = m.inverse().transpose();
    SignatureGrid out = g;
    for (size_t v = 0; v < g.vertices().size(); v++) {
        Vertex &vx = out.vertex(static_cast<int>(v));
        vx.sig = holographic_transform(vx.side == Side::L ? m : right, vx.sig);
        vx.name.clear();
    }
    return out;
}

SignatureGrid collapse_subgrid(const SignatureGrid &g, const std::vector<int> &subset) {
    g.validate();
    std::vector<bool> inside(g.vertices().size(), false);
    for (int v : subset) {
        inside.at(static_cast<size_t>(v)) = true;
    }
    std::vector<int> remap(g.vertices().size(), -1);
    SignatureGrid sub;
    SignatureGrid out;
    std::vector<int> sub_id(g.vertices().size(), -1);
    for (size_t v = 0; v < g.vertices().size(); v++) {
        if (inside[v]) {
            sub_id[v] = sub.add_vertex(g.vertices()[v].sig);
        } else {
            remap[v] = out.add_vertex(g.vertices()[v].sig, g.vertices()[v].side, g.vertices()[v].name);
        }
    }
    auto in_sub = [&](const Endpoint &e) { return Endpoint{sub_id[static_cast<size_t>(e.vertex)], e.slot}; };
    auto in_out = [&](const Endpoint &e) { return Endpoint{remap[static_cast<size_t>(e.vertex)], e.slot}; };
    // Boundary endpoints become gadget slots in order of appearance.
    std::vector<std::pair<Endpoint, std::optional<Endpoint>>> boundary;
    std::vector<Edge> kept;
    for (const auto &e : g.edges()) {
        bool ia = inside[static_cast<size_t>(e.a.vertex)], ib = inside[static_cast<size_t>(e.b.vertex)];
        if (ia && ib) {
            sub.connect(in_sub(e.a), in_sub(e.b));
        } else if (ia) {
            boundary.emplace_back(e.a, in_out(e.b));
        } else if (ib) {
            boundary.emplace_back(e.b, in_out(e.a));
        } else {
            kept.push_back(Edge{in_out(e.a), in_out(e.b)});
        }
    }
    std::vector<std::optional<int>> outer_dangling_slot;
    for (const auto &d : g.dangling()) {
        if (inside[static_cast<size_t>(d.vertex)]) {
            outer_dangling_slot.emplace_back(static_cast<int>(boundary.size()));
            boundary.emplace_back(d, std::nullopt);
        } else {
            outer_dangling_slot.emplace_back(std::nullopt);
        }
    }
    for (const auto &b : boundary) {
        sub.add_dangling(in_sub(b.first));
    }
    int gv = out.add_vertex(gadget_signature(sub));
    for (const auto &e : kept) {
        out.connect(e.a, e.b);
    }
    for (size_t k = 0; k < boundary.size(); k++) {
        if (boundary[k].second) {
            out.connect(Endpoint{gv, static_cast<int>(k)}, *boundary[k].second);
        }
    }
    for (size_t j = 0; j < g.dangling().size(); j++) {
        if (outer_dangling_slot[j]) {
            out.add_dangling(Endpoint{gv, *outer_dangling_slot[j]});
        } else {
            out.add_dangling(in_out(g.dangling()[j]));
        }
    }
    return out;
}

}  // namespace holant
