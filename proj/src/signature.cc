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
#include <ostream>

#include "holant/error.h"

namespace holant {

namespace {

void check_arity(int arity) {
    if (arity < 0 || arity > kMaxArity) {
        throw HolantError(ErrorKind::ArityLimit, "arity " + std::to_string(arity) + " outside [0, 16]");
    }
}

void check_slot(const Signature &f, int slot) {
    if (slot < 0 || slot >= f.arity()) {
        throw HolantError(ErrorKind::SlotOutOfRange,
                          "slot " + std::to_string(slot) + " for arity " + std::to_string(f.arity()));
    }
}

// Bit position (from the least significant end) of `slot` in an n-bit index.
inline int bitpos(int n, int slot) {
    return n - 1 - slot;
}

inline size_t remove_bit(size_t x, int p) {
    size_t low = x & ((size_t{1} << p) - 1);
    return ((x >> (p + 1)) << p) | low;
}

inline size_t insert_bit(size_t r, int p, size_t b) {
    size_t low = r & ((size_t{1} << p) - 1);
    return ((r >> p) << (p + 1)) | (b << p) | low;
}

}  // namespace

Signature::Signature() : arity_(0), values_{Scalar(1)} {
}

Signature::Signature(int arity, std::vector<Scalar> values) : arity_(arity), values_(std::move(values)) {
    check_arity(arity);
    if (values_.size() != (size_t{1} << arity)) {
        throw HolantError(ErrorKind::WrongArity, "signature of arity " + std::to_string(arity) + " needs " +
                                                     std::to_string(size_t{1} << arity) + " values, got " +
                                                     std::to_string(values_.size()));
    }
}

Signature Signature::zero(int arity) {
    check_arity(arity);
    return Signature(arity, std::vector<Scalar>(size_t{1} << arity));
}

Signature Signature::constant(const Scalar &value) {
    return Signature(0, {value});
}

Signature Signature::from_symmetric(std::span<const Scalar> weights) {
    if (weights.empty()) {
        throw HolantError(ErrorKind::WrongArity, "symmetric shorthand needs at least one value");
    }
    int n = static_cast<int>(weights.size()) - 1;
    check_arity(n);
    std::vector<Scalar> values(size_t{1} << n);
    for (size_t x = 0; x < values.size(); x++) {
        values[x] = weights[std::popcount(x)];
    }
    return Signature(n, std::move(values));
}

Signature Signature::ket(std::string_view bits) {
    int n = static_cast<int>(bits.size());
    Signature f = zero(n);
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw HolantError(ErrorKind::Parse, "bit string must be 0/1");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    f.values_[index] = 1;
    return f;
}

const Scalar &Signature::at_bits(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != arity_) {
        throw HolantError(ErrorKind::WrongArity, "bit string length differs from arity");
    }
    size_t index = 0;
    for (char c : bits) {
        index = (index << 1) | static_cast<size_t>(c == '1');
    }
    return values_[index];
}

bool Signature::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar &s) { return s.is_zero(); });
}

std::vector<size_t> Signature::support() const {
    std::vector<size_t> out;
    for (size_t x = 0; x < values_.size(); x++) {
        if (!values_[x].is_zero()) {
            out.push_back(x);
        }
    }
    return out;
}

Signature Signature::operator+(const Signature &other) const {
    if (other.arity_ != arity_) {
        throw HolantError(ErrorKind::WrongArity, "adding signatures of different arity");
    }
    Signature r = *this;
    for (size_t x = 0; x < values_.size(); x++) {
        r.values_[x] += other.values_[x];
    }
    return r;
}

Signature Signature::scaled(const Scalar &s) const {
    Signature r = *this;
    for (auto &v : r.values_) {
        v *= s;
    }
    return r;
}

bool Signature::operator==(const Signature &other) const {
    return arity_ == other.arity_ && values_ == other.values_;
}

std::string Signature::bits(size_t index) const {
    std::string out(static_cast<size_t>(arity_), '0');
    for (int s = 0; s < arity_; s++) {
        out[static_cast<size_t>(s)] = bit(index, s) ? '1' : '0';
    }
    return out;
}

std::string Signature::str() const {
    std::string out;
    for (size_t x = 0; x < values_.size(); x++) {
        const Scalar &v = values_[x];
        if (v.is_zero()) {
            continue;
        }
        std::string coef;
        bool negative = false;
        if (v.is_one()) {
            coef = "";
        } else if ((-v).is_one()) {
            negative = true;
        } else {
            std::string lit = v.str();
            bool compound = lit.find(' ') != std::string::npos;
            if (!compound && lit[0] == '-') {
                negative = true;
                lit = lit.substr(1);
            }
            coef = compound ? "(" + lit + ")*" : lit + "*";
        }
        std::string ket = coef + "|" + bits(x) + ">";
        if (out.empty()) {
            out = (negative ? "-" : "") + ket;
        } else {
            out += (negative ? " - " : " + ") + ket;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream &operator<<(std::ostream &out, const Signature &f) {
    return out << f.str();
}

namespace sigs {

Signature delta0() {
    return Signature(1, {1, 0});
}

Signature delta1() {
    return Signature(1, {0, 1});
}

Signature plus() {
    return Signature(1, {1, 1});
}

Signature minus() {
    return Signature(1, {1, -1});
}

Signature equality(int n) {
    Signature f = Signature::zero(n);
    std::vector<Scalar> v = f.values();
    v.front() = 1;
    v.back() = 1;
    return Signature(n, std::move(v));
}

Signature w_state() {
    return exact_one(3);
}

Signature exact_one(int n) {
    std::vector<Scalar> weights(static_cast<size_t>(n) + 1);
    weights[1] = 1;
    return Signature::from_symmetric(weights);
}

}  // namespace sigs

Signature tensor_product(const Signature &f, const Signature &g) {
    int n = f.arity() + g.arity();
    if (n > kMaxArity) {
        throw HolantError(ErrorKind::ArityLimit, "tensor product arity " + std::to_string(n) + " exceeds 16");
    }
    std::vector<Scalar> values(size_t{1} << n);
    for (size_t x = 0; x < f.size(); x++) {
        if (f[x].is_zero()) {
            continue;
        }
        for (size_t y = 0; y < g.size(); y++) {
            values[(x << g.arity()) | y] = f[x] * g[y];
        }
    }
    return Signature(n, std::move(values));
}

Signature apply_unary(const Signature &f, int slot, const Signature &g) {
    check_slot(f, slot);
    if (g.arity() != 1) {
        throw HolantError(ErrorKind::WrongArity, "apply_unary needs a unary signature");
    }
    int n = f.arity();
    int p = bitpos(n, slot);
    std::vector<Scalar> values(size_t{1} << (n - 1));
    for (size_t r = 0; r < values.size(); r++) {
        Scalar acc;
        for (size_t b = 0; b < 2; b++) {
            if (g[b].is_zero()) {
                continue;
            }
            const Scalar &v = f[insert_bit(r, p, b)];
            if (!v.is_zero()) {
                acc += g[b] * v;
            }
        }
        values[r] = std::move(acc);
    }
    return Signature(n - 1, std::move(values));
}

Signature pin(const Signature &f, int slot, int bit) {
    return apply_unary(f, slot, bit ? sigs::delta1() : sigs::delta0());
}

Signature pin_many(const Signature &f, std::span<const int> slots, std::span<const int> bits) {
    if (slots.size() != bits.size()) {
        throw HolantError(ErrorKind::PreconditionViolated, "pin_many: slots and bits differ in length");
    }
    std::vector<std::pair<int, int>> order;
    for (size_t k = 0; k < slots.size(); k++) {
        check_slot(f, slots[k]);
        order.emplace_back(slots[k], bits[k]);
    }
    std::sort(order.begin(), order.end());
    for (size_t k = 1; k < order.size(); k++) {
        if (order[k].first == order[k - 1].first) {
            throw HolantError(ErrorKind::PreconditionViolated, "pin_many: repeated slot");
        }
    }
    Signature out = f;
    // Highest slot first so lower slot numbers stay valid.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        out = pin(out, it->first, it->second);
    }
    return out;
}

Signature self_loop(const Signature &f, int i, int j) {
    if (f.arity() < 2) {
        throw HolantError(ErrorKind::WrongArity, "self loop needs arity >= 2");
    }
    check_slot(f, i);
    check_slot(f, j);
    if (i == j) {
        throw HolantError(ErrorKind::InvalidLoop, "self loop on a single slot");
    }
    int n = f.arity();
    int hi = bitpos(n, std::min(i, j));
    int lo = bitpos(n, std::max(i, j));
    std::vector<Scalar> values(size_t{1} << (n - 2));
    for (size_t x = 0; x < f.size(); x++) {
        if (((x >> hi) & 1) != ((x >> lo) & 1) || f[x].is_zero()) {
            continue;
        }
        size_t r = remove_bit(remove_bit(x, hi), lo);
        values[r] += f[x];
    }
    return Signature(n - 2, std::move(values));
}

Signature apply_local(const Signature &f, int slot, const Mat2 &m) {
    check_slot(f, slot);
    int p = bitpos(f.arity(), slot);
    std::vector<Scalar> values = f.values();
    size_t stride = size_t{1} << p;
    for (size_t x = 0; x < values.size(); x++) {
        if (x & stride) {
            continue;
        }
        const Scalar v0 = values[x];
        const Scalar v1 = values[x | stride];
        auto w = m.apply(v0, v1);
        values[x] = std::move(w[0]);
        values[x | stride] = std::move(w[1]);
    }
    return Signature(f.arity(), std::move(values));
}

Signature holographic_transform(const Mat2 &m, const Signature &f) {
    Signature out = f;
    for (int s = 0; s < f.arity(); s++) {
        out = apply_local(out, s, m);
    }
    return out;
}

Signature permute_inputs(const Signature &f, std::span<const int> perm) {
    int n = f.arity();
    if (static_cast<int>(perm.size()) != n) {
        throw HolantError(ErrorKind::InvalidPermutation, "permutation length differs from arity");
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)]) {
            throw HolantError(ErrorKind::InvalidPermutation, "not a bijection on slots");
        }
        seen[static_cast<size_t>(p)] = true;
    }
    std::vector<Scalar> values(f.size());
    for (size_t x = 0; x < f.size(); x++) {
        size_t y = 0;
        for (int j = 0; j < n; j++) {
            if (f.bit(x, j)) {
                y |= size_t{1} << bitpos(n, perm[static_cast<size_t>(j)]);
            }
        }
        values[y] = f[x];
    }
    return Signature(n, std::move(values));
}

std::optional<std::vector<Scalar>> symmetric_shorthand(const Signature &f) {
    int n = f.arity();
    std::vector<Scalar> weights(static_cast<size_t>(n) + 1);
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (size_t x = 0; x < f.size(); x++) {
        size_t w = static_cast<size_t>(std::popcount(x));
        if (!seen[w]) {
            weights[w] = f[x];
            seen[w] = true;
        } else if (weights[w] != f[x]) {
            return std::nullopt;
        }
    }
    return weights;
}

namespace {

struct Split {
    Signature first;
    Signature rest;
};

// Tests whether f (over local slots 0..m-1) is rank one across the cut
// `in_first` | complement and returns both sides if so. The second side is
// normalised to 1 at the pivot column.
std::optional<Split> try_split(const Signature &f, const std::vector<bool> &in_first) {
    int m = f.arity();
    int k = static_cast<int>(std::count(in_first.begin(), in_first.end(), true));
    size_t rows = size_t{1} << k;
    size_t cols = size_t{1} << (m - k);
    std::vector<size_t> row_of(f.size()), col_of(f.size());
    for (size_t x = 0; x < f.size(); x++) {
        size_t r = 0, c = 0;
        for (int s = 0; s < m; s++) {
            size_t b = static_cast<size_t>(f.bit(x, s));
            if (in_first[static_cast<size_t>(s)]) {
                r = (r << 1) | b;
            } else {
                c = (c << 1) | b;
            }
        }
        row_of[x] = r;
        col_of[x] = c;
    }
    std::vector<const Scalar *> mat(rows * cols);
    size_t pivot = f.size();
    for (size_t x = 0; x < f.size(); x++) {
        mat[row_of[x] * cols + col_of[x]] = &f[x];
        if (pivot == f.size() && !f[x].is_zero()) {
            pivot = x;
        }
    }
    size_t r0 = row_of[pivot], c0 = col_of[pivot];
    const Scalar &p = f[pivot];
    for (size_t r = 0; r < rows; r++) {
        const Scalar &rc0 = *mat[r * cols + c0];
        for (size_t c = 0; c < cols; c++) {
            const Scalar &v = *mat[r * cols + c];
            const Scalar &r0c = *mat[r0 * cols + c];
            bool lhs_zero = v.is_zero();
            bool rhs_zero = rc0.is_zero() || r0c.is_zero();
            if (lhs_zero && rhs_zero) {
                continue;
            }
            if (lhs_zero != rhs_zero || v * p != rc0 * r0c) {
                return std::nullopt;
            }
        }
    }
    std::vector<Scalar> first(rows), rest(cols);
    for (size_t r = 0; r < rows; r++) {
        first[r] = *mat[r * cols + c0];
    }
    Scalar inv = p.inverse();
    for (size_t c = 0; c < cols; c++) {
        rest[c] = *mat[r0 * cols + c] * inv;
    }
    return Split{Signature(k, std::move(first)), Signature(m - k, std::move(rest))};
}

void factorize_into(const Signature &f, std::vector<int> slots, std::vector<Factor> &out) {
    int m = f.arity();
    if (m <= 1) {
        out.push_back(Factor{std::move(slots), f});
        return;
    }
    // Smallest block containing local slot 0 that splits off; minimality
    // makes that block indecomposable.
    for (int k = 1; k < m; k++) {
        std::vector<int> pick(static_cast<size_t>(k - 1));
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            std::vector<bool> in_first(static_cast<size_t>(m), false);
            in_first[0] = true;
            for (int s : pick) {
                in_first[static_cast<size_t>(s)] = true;
            }
            if (auto split = try_split(f, in_first)) {
                std::vector<int> first_slots, rest_slots;
                for (int s = 0; s < m; s++) {
                    (in_first[static_cast<size_t>(s)] ? first_slots : rest_slots).push_back(slots[static_cast<size_t>(s)]);
                }
                out.push_back(Factor{std::move(first_slots), std::move(split->first)});
                factorize_into(split->rest, std::move(rest_slots), out);
                return;
            }
            // Next (k-1)-combination of {1, ..., m-1} in lexicographic order.
            int j = k - 2;
            while (j >= 0 && pick[static_cast<size_t>(j)] == m - 1 - (k - 2 - j)) {
                j--;
            }
            if (j < 0) {
                break;
            }
            pick[static_cast<size_t>(j)]++;
            for (int t = j + 1; t < k - 1; t++) {
                pick[static_cast<size_t>(t)] = pick[static_cast<size_t>(t - 1)] + 1;
            }
        }
    }
    out.push_back(Factor{std::move(slots), f});
}

}  // namespace

std::vector<Factor> tensor_factorize(const Signature &f) {
    if (f.is_zero()) {
        throw HolantError(ErrorKind::ZeroSignature, "cannot factorize the zero signature");
    }
    std::vector<int> slots(static_cast<size_t>(f.arity()));
    std::iota(slots.begin(), slots.end(), 0);
    std::vector<Factor> out;
    factorize_into(f, std::move(slots), out);
    return out;
}

Signature recombine(std::span<const Factor> factors, int arity) {
    Signature acc;
    std::vector<int> order;
    for (const auto &fac : factors) {
        acc = tensor_product(acc, fac.sig);
        order.insert(order.end(), fac.slots.begin(), fac.slots.end());
    }
    if (acc.arity() != arity) {
        throw HolantError(ErrorKind::WrongArity, "factors do not cover the arity");
    }
    return permute_inputs(acc, order);
}

bool is_degenerate(const Signature &f) {
    auto factors = tensor_factorize(f);
    return std::all_of(factors.begin(), factors.end(), [](const Factor &fac) { return fac.sig.arity() <= 1; });
}

bool is_genuinely_entangled(const Signature &f) {
    auto factors = tensor_factorize(f);
    return factors.size() == 1 && f.arity() >= 2;
}

std::optional<Scalar> scale_between(const Signature &f, const Signature &g) {
    if (f.arity() != g.arity()) {
        return std::nullopt;
    }
    size_t pivot = f.size();
    for (size_t x = 0; x < f.size(); x++) {
        if (f[x].is_zero() != g[x].is_zero()) {
            return std::nullopt;
        }
        if (pivot == f.size() && !f[x].is_zero()) {
            pivot = x;
        }
    }
    if (pivot == f.size()) {
        return std::nullopt;
    }
    for (size_t x = pivot + 1; x < f.size(); x++) {
        if (!f[x].is_zero() && f[x] * g[pivot] != g[x] * f[pivot]) {
            return std::nullopt;
        }
    }
    return f[pivot] / g[pivot];
}

bool proportional(const Signature &f, const Signature &g) {
    return scale_between(f, g).has_value();
}

Scalar binary_det(const Signature &f) {
    if (f.arity() != 2) {
        throw HolantError(ErrorKind::WrongArity, "binary_det needs arity 2");
    }
    return f[0] * f[3] - f[1] * f[2];
}

}  // namespace holant
