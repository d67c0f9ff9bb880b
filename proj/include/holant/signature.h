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

#ifndef HOLANT_SIGNATURE_H
#define HOLANT_SIGNATURE_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holant/algebra.h"

namespace holant {

constexpr int kMaxArity = 16;

/// An n-ary function {0,1}^n -> Q(zeta) stored as its 2^n value vector.
///
/// Index convention: slot 0 is the most significant bit, so the value of
/// f(x_0, ..., x_{n-1}) lives at index sum_j x_j 2^{n-1-j}.
class Signature {
   public:
    /// The arity-0 signature with value 1.
    Signature();
    Signature(int arity, std::vector<Scalar> values);

    static Signature zero(int arity);
    static Signature constant(const Scalar &value);
    /// From the Hamming-weight shorthand [f_0, ..., f_n].
    static Signature from_symmetric(std::span<const Scalar> weights);
    /// Single basis vector |bits>, e.g. "010".
    static Signature ket(std::string_view bits);

    int arity() const {
        return arity_;
    }
    size_t size() const {
        return values_.size();
    }
    const std::vector<Scalar> &values() const {
        return values_;
    }
    const Scalar &operator[](size_t index) const {
        return values_[index];
    }
    const Scalar &at_bits(std::string_view bits) const;
    int bit(size_t index, int slot) const {
        return static_cast<int>((index >> (arity_ - 1 - slot)) & 1);
    }

    bool is_zero() const;
    std::vector<size_t> support() const;

    Signature operator+(const Signature &other) const;
    Signature scaled(const Scalar &s) const;
    bool operator==(const Signature &other) const;
    bool operator!=(const Signature &other) const {
        return !(*this == other);
    }

    /// Ket notation, e.g. "|00> + 2*|11>".
    std::string str() const;
    std::string bits(size_t index) const;

   private:
    int arity_ = 0;
    std::vector<Scalar> values_;
};

std::ostream &operator<<(std::ostream &out, const Signature &f);

namespace sigs {
Signature delta0();
Signature delta1();
/// |0> + |1>.
Signature plus();
/// |0> - |1>.
Signature minus();
/// The n-ary equality =_n, equivalently |GHZ_n>.
Signature equality(int n);
/// |001> + |010> + |100>, i.e. ExactOne_3 = [0, 1, 0, 0].
Signature w_state();
Signature exact_one(int n);
}  // namespace sigs

Signature tensor_product(const Signature &f, const Signature &g);

/// Connects slot `slot` of f to the unary g and sums it out.
Signature apply_unary(const Signature &f, int slot, const Signature &g);
Signature pin(const Signature &f, int slot, int bit);
/// Pins every listed slot to the matching bit in one pass.
Signature pin_many(const Signature &f, std::span<const int> slots, std::span<const int> bits);

/// Joins slots i and j by an edge: result(x) = sum_b f(x with b at i and j).
Signature self_loop(const Signature &f, int i, int j);

/// m^{(x) arity} |f>. The matrix need not be invertible.
Signature holographic_transform(const Mat2 &m, const Signature &f);
/// Applies m on one slot only.
Signature apply_local(const Signature &f, int slot, const Mat2 &m);

/// result(x_{perm[0]}, ..., x_{perm[n-1]}) = f(x_0, ..., x_{n-1}): input j moves to slot perm[j].
Signature permute_inputs(const Signature &f, std::span<const int> perm);

std::optional<std::vector<Scalar>> symmetric_shorthand(const Signature &f);

struct Factor {
    /// Original slots of this factor, ascending; the factor signature uses this order.
    std::vector<int> slots;
    Signature sig;
};

/// Finest tensor decomposition into genuinely entangled factors, ordered by
/// smallest slot. Multiplying the factors back together (see recombine)
/// reproduces f exactly. Throws ZeroSignature.
std::vector<Factor> tensor_factorize(const Signature &f);
Signature recombine(std::span<const Factor> factors, int arity);

bool is_degenerate(const Signature &f);
bool is_genuinely_entangled(const Signature &f);

/// lambda != 0 with f = lambda * g, if it exists.
std::optional<Scalar> scale_between(const Signature &f, const Signature &g);
bool proportional(const Signature &f, const Signature &g);

/// ad - bc for a binary signature a|00> + b|01> + c|10> + d|11>.
Scalar binary_det(const Signature &f);

}  // namespace holant

#endif
