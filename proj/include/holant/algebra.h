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

#ifndef HOLANT_ALGEBRA_H
#define HOLANT_ALGEBRA_H

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holant {

/// Exact element of the cyclotomic field Q(zeta), zeta = e^{i pi / 4}.
///
/// Stored as c0 + c1 zeta + c2 zeta^2 + c3 zeta^3 with zeta^4 = -1 already
/// applied, so the representation is unique and `==` is structural.
/// zeta^2 is the imaginary unit.
class Scalar {
   public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class &value);
    Scalar(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

    static Scalar zeta();
    static Scalar imag();
    /// zeta^k for any integer k.
    static Scalar zeta_pow(long k);
    static Scalar rational(long num, long den);

    const mpq_class &coeff(size_t k) const {
        return c_[k];
    }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Scalar operator+(const Scalar &other) const;
    Scalar operator-(const Scalar &other) const;
    Scalar operator*(const Scalar &other) const;
    /// Throws DivisionByZero.
    Scalar operator/(const Scalar &other) const;
    Scalar operator-() const;
    Scalar &operator+=(const Scalar &other);
    Scalar &operator-=(const Scalar &other);
    Scalar &operator*=(const Scalar &other);
    bool operator==(const Scalar &other) const;
    bool operator!=(const Scalar &other) const {
        return !(*this == other);
    }

    /// Throws DivisionByZero on zero.
    Scalar inverse() const;
    /// Complex conjugation, zeta -> zeta^7 = -zeta^3.
    Scalar conj() const;
    /// The field automorphism zeta -> zeta^k, k odd.
    Scalar galois(int k) const;
    /// Field norm down to Q (product of the four conjugates).
    mpq_class norm() const;
    Scalar pow(long exponent) const;

    /// k in {0,1,2,3} with *this == i^k, if any.
    std::optional<int> power_of_i() const;
    /// Smallest k >= 1 with this^k == 1, when this is a root of unity.
    std::optional<int> root_of_unity_order() const;

    /// Total order on canonical forms (lexicographic on coefficients).
    /// Only used for deterministic tie-breaking.
    int compare(const Scalar &other) const;

    /// Canonical literal, e.g. "1/2 - 1/2*i", "-w^3", "0".
    std::string str() const;
    /// Parses the literal grammar: rationals, `i`, `w`, + - * / ^ and parentheses.
    /// Throws HolantError(Parse).
    static Scalar parse(std::string_view text);

   private:
    std::array<mpq_class, 4> c_{};
};

std::ostream &operator<<(std::ostream &out, const Scalar &s);

/// Some s in the field with s * s == x, if one exists.
std::optional<Scalar> field_sqrt(const Scalar &x);

/// Dense square matrix over Q(zeta), row-major.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<Scalar> entries;

    const Scalar &at(size_t row, size_t col) const {
        return entries[row * dim + col];
    }
};

/// 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    Scalar a, b, c, d;

    Scalar at(int row, int col) const;
    Scalar det() const;
    bool is_invertible() const {
        return !det().is_zero();
    }
    /// Throws SingularMatrix.
    Mat2 inverse() const;
    Mat2 transpose() const;
    Mat2 operator*(const Mat2 &other) const;
    Mat2 scaled(const Scalar &s) const;
    bool operator==(const Mat2 &other) const;
    bool operator!=(const Mat2 &other) const {
        return !(*this == other);
    }
    /// Equal up to a non-zero scalar factor.
    bool proportional_to(const Mat2 &other) const;
    /// M^{(x)k} as a 2^k x 2^k matrix; requires 1 <= k <= 8.
    DenseMatrix tensor_power(int k) const;
    /// Applies to a column vector (v0, v1).
    std::array<Scalar, 2> apply(const Scalar &v0, const Scalar &v1) const;

    std::string str() const;

    static Mat2 identity();
    static Mat2 diag(const Scalar &x, const Scalar &y);
};

std::ostream &operator<<(std::ostream &out, const Mat2 &m);

namespace mats {
/// diag(1, zeta).
Mat2 T();
/// Bit flip.
Mat2 X();
/// [[1, 1], [i, -i]].
Mat2 K();
Mat2 KX();
Mat2 Z();
/// [[1, 1], [1, -1]] (unnormalised Hadamard).
Mat2 H();
/// diag(1, i).
Mat2 S();
}  // namespace mats

}  // namespace holant

#endif
