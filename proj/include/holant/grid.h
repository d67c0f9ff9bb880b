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

#ifndef HOLANT_GRID_H
#define HOLANT_GRID_H

#include <compare>
#include <string>
#include <vector>

#include "holant/signature.h"

namespace holant {

enum class Side { None, L, R };

struct Endpoint {
    int vertex = 0;
    int slot = 0;
    auto operator<=>(const Endpoint &) const = default;
};

struct Edge {
    Endpoint a, b;
};

struct Vertex {
    Signature sig;
    Side side = Side::None;
    /// Optional signature name used by file formats; empty when anonymous.
    std::string name;
};

/// A multigraph whose vertices carry signatures. Each (vertex, slot)
/// endpoint belongs to exactly one edge or appears once in `dangling`.
class SignatureGrid {
   public:
    int add_vertex(Signature sig, Side side = Side::None, std::string name = {});
    void connect(Endpoint a, Endpoint b);
    void add_dangling(Endpoint e);

    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Endpoint> &dangling() const {
        return dangling_;
    }
    Vertex &vertex(int v) {
        return vertices_.at(static_cast<size_t>(v));
    }
    const Vertex &vertex(int v) const {
        return vertices_.at(static_cast<size_t>(v));
    }

    bool has_sides() const;
    /// Throws InvalidGrid describing the first violated invariant.
    void validate() const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Endpoint> dangling_;
};

constexpr int kBruteForceEdgeLimit = 24;

/// Exact sum over all edge assignments. Requires no dangling edges and at
/// most 24 edges.
Scalar holant_bruteforce(const SignatureGrid &g);

/// Same value via greedy pairwise tensor contraction. Throws
/// ContractionOverflow when an intermediate tensor would exceed arity 16.
Scalar holant_contract(const SignatureGrid &g);

/// Effective signature on the dangling edges, in dangling-list order.
Signature gadget_signature(const SignatureGrid &g);
/// Enumerative version of gadget_signature (used as an oracle).
Signature gadget_signature_bruteforce(const SignatureGrid &g);

/// Subdivides every edge with a new R vertex carrying =_2; originals become L.
SignatureGrid make_bipartite(const SignatureGrid &g);

/// L signatures become m o f, R signatures become (m^{-1})^T o g.
SignatureGrid transform_bipartite(const SignatureGrid &g, const Mat2 &m);

/// Replaces the vertices in `subset` by one vertex carrying their gadget
/// signature. The new vertex is appended last; the remaining vertices keep
/// their relative order.
SignatureGrid collapse_subgrid(const SignatureGrid &g, const std::vector<int> &subset);

}  // namespace holant

#endif
