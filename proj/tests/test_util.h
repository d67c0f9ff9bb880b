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

#ifndef HOLANT_TEST_UTIL_H
#define HOLANT_TEST_UTIL_H

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "holant/grid.h"

namespace holant::testing {

inline Scalar pick_entry(std::mt19937_64 &rng) {
    static const Scalar kEntries[] = {0, 1, -1, Scalar::imag(), -Scalar::imag(), Scalar::zeta()};
    return kEntries[std::uniform_int_distribution<int>(0, 5)(rng)];
}

inline Signature random_signature(std::mt19937_64 &rng, int arity) {
    std::vector<Scalar> v(size_t{1} << arity);
    for (auto &x : v) {
        x = pick_entry(rng);
    }
    return Signature(arity, std::move(v));
}

inline Scalar random_field_element(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    return Scalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                  mpq_class(num(rng), den(rng)));
}

inline Mat2 random_invertible(std::mt19937_64 &rng) {
    while (true) {
        Mat2 m{random_field_element(rng), random_field_element(rng), random_field_element(rng),
               random_field_element(rng)};
        if (m.is_invertible()) {
            return m;
        }
    }
}

/// Wires the given arities into a closed grid by pairing slots uniformly at
/// random (self-loops and parallel edges allowed). The arity sum must be even.
template <typename MakeSig>
SignatureGrid random_wiring(std::mt19937_64 &rng, const std::vector<int> &arities, MakeSig make_sig) {
    SignatureGrid g;
    std::vector<Endpoint> ends;
    for (size_t v = 0; v < arities.size(); v++) {
        g.add_vertex(make_sig(arities[v]));
        for (int s = 0; s < arities[v]; s++) {
            ends.push_back(Endpoint{static_cast<int>(v), s});
        }
    }
    std::shuffle(ends.begin(), ends.end(), rng);
    for (size_t k = 0; k + 1 < ends.size(); k += 2) {
        g.connect(ends[k], ends[k + 1]);
    }
    return g;
}

/// Random arities in [1, max_arity] with an even sum of at most 2 * max_edges.
inline std::vector<int> random_arities(std::mt19937_64 &rng, int max_vertices, int max_arity, int max_edges) {
    while (true) {
        int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        std::vector<int> ar(static_cast<size_t>(nv));
        int sum = 0;
        for (auto &a : ar) {
            a = std::uniform_int_distribution<int>(1, max_arity)(rng);
            sum += a;
        }
        if (sum % 2 == 0 && sum <= 2 * max_edges) {
            return ar;
        }
    }
}

inline SignatureGrid random_grid(std::mt19937_64 &rng, int max_edges = 10) {
    auto ar = random_arities(rng, 6, 4, max_edges);
    return random_wiring(rng, ar, [&](int n) { return random_signature(rng, n); });
}

// Builds c * i^{l(t)} (-1)^{q(t)} on offset + span(vectors) straight from
// the definition, with a possibly non-reduced spanning set.
inline Signature random_affine(std::mt19937_64 &rng, int n) {
    std::uniform_int_distribution<uint32_t> any(0, (1u << n) - 1);
    int r = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<uint32_t> vecs;
    while (static_cast<int>(vecs.size()) < r) {
        uint32_t v = any(rng);
        // Keep the set independent: reject vectors already in the span.
        bool dependent = v == 0;
        for (uint32_t s = 1; s < (1u << vecs.size()) && !dependent; s++) {
            uint32_t acc = 0;
            for (size_t j = 0; j < vecs.size(); j++) {
                if ((s >> j) & 1) {
                    acc ^= vecs[j];
                }
            }
            dependent = acc == v;
        }
        if (!dependent) {
            vecs.push_back(v);
        }
    }
    uint32_t offset = any(rng);
    std::vector<int> lin(static_cast<size_t>(r));
    for (auto &l : lin) {
        l = std::uniform_int_distribution<int>(0, 3)(rng);
    }
    std::vector<std::vector<int>> quad(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r)));
    for (auto &row : quad) {
        for (auto &q : row) {
            q = std::uniform_int_distribution<int>(0, 1)(rng);
        }
    }
    Scalar c = Scalar::zeta_pow(std::uniform_int_distribution<int>(0, 7)(rng)) *
               Scalar(std::uniform_int_distribution<long>(1, 3)(rng));
    std::vector<Scalar> vals(size_t{1} << n);
    for (uint32_t t = 0; t < (1u << r); t++) {
        uint32_t x = offset;
        long e = 0;
        for (int j = 0; j < r; j++) {
            if (!((t >> j) & 1)) {
                continue;
            }
            x ^= vecs[static_cast<size_t>(j)];
            e += lin[static_cast<size_t>(j)];
            for (int k = j + 1; k < r; k++) {
                if ((t >> k) & 1) {
                    e += 2 * quad[static_cast<size_t>(j)][static_cast<size_t>(k)];
                }
            }
        }
        vals[x] = c * Scalar::imag().pow(e % 4);
    }
    return Signature(n, std::move(vals));
}

inline Signature nonzero_signature(std::mt19937_64 &rng, int arity) {
    while (true) {
        Signature f = random_signature(rng, arity);
        if (!f.is_zero()) {
            return f;
        }
    }
}

inline Signature shuffled(std::mt19937_64 &rng, const Signature &f) {
    std::vector<int> perm(static_cast<size_t>(f.arity()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute_inputs(f, perm);
}

// Tensor product of random blocks of arity <= 2, slots shuffled.
inline Signature random_t_signature(std::mt19937_64 &rng, int n) {
    Signature f = Signature::constant(1);
    int left = n;
    while (left > 0) {
        int k = std::min(left, std::uniform_int_distribution<int>(1, 2)(rng));
        f = tensor_product(f, nonzero_signature(rng, k));
        left -= k;
    }
    return shuffled(rng, f);
}

// Tensor product of generalised equalities a|x> + b|x-bar>.
inline Signature random_e_signature(std::mt19937_64 &rng, int n) {
    Signature f = Signature::constant(1);
    int left = n;
    while (left > 0) {
        int k = std::uniform_int_distribution<int>(1, left)(rng);
        uint32_t x = std::uniform_int_distribution<uint32_t>(0, (1u << k) - 1)(rng);
        std::vector<Scalar> vals(size_t{1} << k);
        vals[x] = pick_entry(rng);
        vals[x ^ ((1u << k) - 1)] += pick_entry(rng);
        if (vals[x].is_zero() && vals[x ^ ((1u << k) - 1)].is_zero()) {
            vals[x] = 1;
        }
        f = tensor_product(f, Signature(k, vals));
        left -= k;
    }
    return shuffled(rng, f);
}

}  // namespace holant::testing

#endif
