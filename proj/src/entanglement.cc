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

#include <algorithm>
#include <functional>

#include "holant/error.h"

namespace holant {

const char *ternary_tag_name(TernaryTag tag) {
    switch (tag) {
        case TernaryTag::GHZ:
            return "GHZ";
        case TernaryTag::W:
            return "W";
        case TernaryTag::NotGenuine:
            return "PRODUCT";
    }
    return "?";
}

namespace {

void require_ternary(const Signature &f) {
    if (f.arity() != 3) {
        throw HolantError(ErrorKind::WrongArity, "ternary signature expected");
    }
}

}  // namespace

Scalar ghz_polynomial(const Signature &f) {
    require_ternary(f);
    const auto &a = f.values();
    Scalar s = a[0] * a[7] - a[2] * a[5] + a[1] * a[6] - a[3] * a[4];
    return s * s - Scalar(4) * (a[2] * a[4] - a[0] * a[6]) * (a[3] * a[5] - a[1] * a[7]);
}

bool w_clauses(const Signature &f) {
    require_ternary(f);
    const auto &a = f.values();
    bool c1 = a[0] * a[3] != a[1] * a[2] || a[5] * a[6] != a[4] * a[7];
    bool c2 = a[1] * a[4] != a[0] * a[5] || a[3] * a[6] != a[2] * a[7];
    bool c3 = a[3] * a[5] != a[1] * a[7] || a[2] * a[4] != a[0] * a[6];
    return c1 && c2 && c3;
}

TernaryClass ternary_class(const Signature &f) {
    require_ternary(f);
    if (f.is_zero()) {
        throw HolantError(ErrorKind::ZeroSignature, "ternary_class of the zero signature");
    }
    if (!ghz_polynomial(f).is_zero()) {
        return {TernaryTag::GHZ, {}};
    }
    if (w_clauses(f)) {
        return {TernaryTag::W, {}};
    }
    return {TernaryTag::NotGenuine, tensor_factorize(f)};
}

char unary_label_char(UnaryLabel label) {
    switch (label) {
        case UnaryLabel::Zero:
            return '0';
        case UnaryLabel::One:
            return '1';
        case UnaryLabel::Plus:
            return '+';
        case UnaryLabel::Minus:
            return '-';
    }
    return '?';
}

Signature unary_of(UnaryLabel label) {
    switch (label) {
        case UnaryLabel::Zero:
            return sigs::delta0();
        case UnaryLabel::One:
            return sigs::delta1();
        case UnaryLabel::Plus:
            return sigs::plus();
        case UnaryLabel::Minus:
            return sigs::minus();
    }
    return sigs::plus();
}

Projection find_entangling_projection(const Signature &f, int j, int k) {
    int n = f.arity();
    if (n < 2 || j == k || j < 0 || k < 0 || j >= n || k >= n) {
        throw HolantError(ErrorKind::PreconditionViolated, "projection needs two distinct slots of f");
    }
    std::vector<int> others;
    for (int s = 0; s < n; s++) {
        if (s != j && s != k) {
            others.push_back(s);
        }
    }
    const UnaryLabel order[] = {UnaryLabel::Zero, UnaryLabel::One, UnaryLabel::Plus, UnaryLabel::Minus};
    std::vector<UnaryLabel> chosen(others.size());
    // Projecting slots from the highest down keeps lower slot numbers valid;
    // the search itself runs over the lowest slot first.
    std::function<std::optional<Signature>(size_t, const Signature &)> search =
        [&](size_t depth, const Signature &cur) -> std::optional<Signature> {
        if (depth == others.size()) {
            Signature r = cur;
            if (j > k) {
                r = permute_inputs(r, std::vector<int>{1, 0});
            }
            if (!binary_det(r).is_zero()) {
                return r;
            }
            return std::nullopt;
        }
        // Position of others[depth] in `cur`: earlier-projected slots are gone.
        int pos = others[depth] - static_cast<int>(depth);
        for (UnaryLabel lab : order) {
            Signature next = apply_unary(cur, pos, unary_of(lab));
            if (next.is_zero()) {
                continue;
            }
            chosen[depth] = lab;
            if (auto r = search(depth + 1, next)) {
                return r;
            }
        }
        return std::nullopt;
    };
    // `others` is ascending, so `pos` only shifts past slots already projected;
    // j and k stay in place.
    auto residual = search(0, f);
    if (!residual) {
        throw HolantError(ErrorKind::ExhaustionFailure, "no entangling projection: signature is not genuinely entangled");
    }
    return Projection{others, chosen, *residual};
}

size_t merge_index(int arity, std::span<const int> slots, size_t bits, std::span<const int> rest_slots, size_t rest) {
    size_t idx = 0;
    int nb = static_cast<int>(slots.size());
    int nr = static_cast<int>(rest_slots.size());
    for (int t = 0; t < nb; t++) {
        if ((bits >> (nb - 1 - t)) & 1) {
            idx |= size_t{1} << (arity - 1 - slots[static_cast<size_t>(t)]);
        }
    }
    for (int t = 0; t < nr; t++) {
        if ((rest >> (nr - 1 - t)) & 1) {
            idx |= size_t{1} << (arity - 1 - rest_slots[static_cast<size_t>(t)]);
        }
    }
    return idx;
}

int hamming(const std::string &a, const std::string &b) {
    int d = 0;
    for (size_t t = 0; t < a.size(); t++) {
        d += a[t] != b[t];
    }
    return d;
}

namespace {

std::string to_bits(size_t x, int len) {
    std::string s(static_cast<size_t>(len), '0');
    for (int t = 0; t < len; t++) {
        if ((x >> (len - 1 - t)) & 1) {
            s[static_cast<size_t>(t)] = '1';
        }
    }
    return s;
}

void fill_min_pair(DistanceProfile &p, const std::vector<std::string> &xs, const std::vector<std::string> &ys,
                   bool distinct_only) {
    int best = -1;
    for (const auto &x : xs) {
        for (const auto &y : ys) {
            if (distinct_only && !(x < y)) {
                continue;
            }
            int d = hamming(x, y);
            if (best < 0 || d < best) {
                best = d;
                p.x = x;
                p.y = y;
            }
        }
    }
    p.value = best;
}

}  // namespace

DistanceProfile distance_profile(const Signature &f, int level, const std::optional<Signature> &anchor,
                                 std::span<const int> anchor_slots) {
    if (f.is_zero()) {
        throw HolantError(ErrorKind::ZeroSignature, "distance profile of the zero signature");
    }
    int n = f.arity();
    DistanceProfile p;
    p.level = level;
    if (level == 0) {
        for (int s = 0; s < n; s++) {
            p.slots.push_back(s);
        }
        std::vector<std::string> support;
        for (size_t x : f.support()) {
            support.push_back(to_bits(x, n));
        }
        if (support.size() < 2) {
            throw HolantError(ErrorKind::ProfileUndefined, "support has fewer than two strings");
        }
        fill_min_pair(p, support, support, true);
        return p;
    }
    if (level < 0 || level > 3) {
        throw HolantError(ErrorKind::PreconditionViolated, "distance level must be 0..3");
    }
    if (!anchor) {
        throw HolantError(ErrorKind::PreconditionViolated, "distance levels 1-3 need an anchor");
    }
    int want = level == 2 ? 1 : 2;
    if (anchor->arity() != want || static_cast<int>(anchor_slots.size()) != want) {
        throw HolantError(ErrorKind::WrongArity, "anchor of the wrong arity for level " + std::to_string(level));
    }
    std::vector<int> anchor_sorted(anchor_slots.begin(), anchor_slots.end());
    if (!std::is_sorted(anchor_sorted.begin(), anchor_sorted.end())) {
        throw HolantError(ErrorKind::PreconditionViolated, "anchor slots must be ascending");
    }
    for (int s = 0; s < n; s++) {
        if (std::find(anchor_sorted.begin(), anchor_sorted.end(), s) == anchor_sorted.end()) {
            p.slots.push_back(s);
        }
    }
    int r = static_cast<int>(p.slots.size());
    for (size_t x = 0; x < (size_t{1} << r); x++) {
        std::vector<Scalar> vals(size_t{1} << want);
        for (size_t b = 0; b < vals.size(); b++) {
            vals[b] = f[merge_index(n, anchor_sorted, b, p.slots, x)];
        }
        Signature phi(want, std::move(vals));
        if (phi.is_zero()) {
            continue;
        }
        (proportional(phi, *anchor) ? p.a_set : p.b_set).push_back(to_bits(x, r));
    }
    if (p.a_set.empty() || p.b_set.empty()) {
        throw HolantError(ErrorKind::ProfileUndefined,
                          std::string("distance level ") + std::to_string(level) + ": " +
                              (p.a_set.empty() ? "A" : "B") + " set is empty");
    }
    fill_min_pair(p, p.a_set, p.b_set, false);
    return p;
}

}  // namespace holant
