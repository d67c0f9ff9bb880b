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

#include "holant/algebra.h"

#include <cctype>
#include <ostream>
#include <sstream>

#include "holant/error.h"

namespace holant {

namespace {

// zeta^m for m in [0, 8) as (sign, basis index).
std::pair<int, int> reduce_power(long m) {
    m %= 8;
    if (m < 0) {
        m += 8;
    }
    if (m >= 4) {
        return {-1, static_cast<int>(m - 4)};
    }
    return {1, static_cast<int>(m)};
}

}  // namespace

Scalar::Scalar(long value) {
    c_[0] = value;
}

Scalar::Scalar(const mpq_class &value) {
    c_[0] = value;
}

Scalar::Scalar(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (auto &c : c_) {
        c.canonicalize();
    }
}

Scalar Scalar::zeta() {
    return Scalar(0, 1, 0, 0);
}

Scalar Scalar::imag() {
    return Scalar(0, 0, 1, 0);
}

Scalar Scalar::zeta_pow(long k) {
    auto [sign, idx] = reduce_power(k);
    Scalar r;
    r.c_[idx] = sign;
    return r;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) {
        throw HolantError(ErrorKind::DivisionByZero, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

bool Scalar::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_one() const {
    return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Scalar Scalar::operator+(const Scalar &other) const {
    Scalar r = *this;
    r += other;
    return r;
}

Scalar Scalar::operator-(const Scalar &other) const {
    Scalar r = *this;
    r -= other;
    return r;
}

Scalar &Scalar::operator+=(const Scalar &other) {
    for (size_t k = 0; k < 4; k++) {
        c_[k] += other.c_[k];
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &other) {
    for (size_t k = 0; k < 4; k++) {
        c_[k] -= other.c_[k];
    }
    return *this;
}

Scalar Scalar::operator*(const Scalar &other) const {
    Scalar r;
    if (is_zero() || other.is_zero()) {
        return r;
    }
    if (other.is_rational()) {
        for (size_t k = 0; k < 4; k++) {
            r.c_[k] = c_[k] * other.c_[0];
        }
        return r;
    }
    for (size_t j = 0; j < 4; j++) {
        if (sgn(c_[j]) == 0) {
            continue;
        }
        for (size_t k = 0; k < 4; k++) {
            if (sgn(other.c_[k]) == 0) {
                continue;
            }
            mpq_class p = c_[j] * other.c_[k];
            if (j + k >= 4) {
                r.c_[j + k - 4] -= p;
            } else {
                r.c_[j + k] += p;
            }
        }
    }
    return r;
}

Scalar &Scalar::operator*=(const Scalar &other) {
    *this = *this * other;
    return *this;
}

Scalar Scalar::operator/(const Scalar &other) const {
    return *this * other.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (size_t k = 0; k < 4; k++) {
        r.c_[k] = -c_[k];
    }
    return r;
}

bool Scalar::operator==(const Scalar &other) const {
    return c_ == other.c_;
}

Scalar Scalar::galois(int k) const {
    if (k % 2 == 0) {
        throw HolantError(ErrorKind::PreconditionViolated, "galois exponent must be odd");
    }
    Scalar r;
    for (int j = 0; j < 4; j++) {
        if (sgn(c_[j]) == 0) {
            continue;
        }
        auto [sign, idx] = reduce_power(static_cast<long>(j) * k);
        if (sign > 0) {
            r.c_[idx] += c_[j];
        } else {
            r.c_[idx] -= c_[j];
        }
    }
    return r;
}

Scalar Scalar::conj() const {
    return galois(7);
}

mpq_class Scalar::norm() const {
    Scalar n = *this * galois(3) * galois(5) * galois(7);
    return n.c_[0];
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw HolantError(ErrorKind::DivisionByZero, "inverse of zero");
    }
    if (is_rational()) {
        return Scalar(mpq_class(1) / c_[0]);
    }
    Scalar others = galois(3) * galois(5) * galois(7);
    Scalar n = *this * others;
    mpq_class inv_norm = mpq_class(1) / n.c_[0];
    Scalar r;
    for (size_t k = 0; k < 4; k++) {
        r.c_[k] = others.c_[k] * inv_norm;
    }
    return r;
}

namespace {

// a + b sqrt(2) with rational a, b.
struct RealPart {
    mpq_class a, b;

    RealPart operator+(const RealPart &o) const {
        return {a + o.a, b + o.b};
    }
    RealPart operator-(const RealPart &o) const {
        return {a - o.a, b - o.b};
    }
    RealPart operator*(const RealPart &o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    RealPart operator/(const RealPart &o) const {
        mpq_class n = o.a * o.a - 2 * o.b * o.b;
        return RealPart{a * o.a - 2 * b * o.b, b * o.a - a * o.b} * RealPart{1 / n, 0};
    }
    bool is_zero() const {
        return a == 0 && b == 0;
    }
};

std::optional<mpq_class> rational_sqrt(const mpq_class &q) {
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
        return std::nullopt;
    }
    return mpq_class(sqrt(q.get_num()), sqrt(q.get_den()));
}

// Square roots in a quadratic extension L(sqrt m) from square roots in L:
// (A + B sqrt m)^2 = p + q sqrt m needs A^2 = (p +- sqrt(p^2 - m q^2)) / 2.
std::optional<RealPart> real_sqrt(const RealPart &x) {
    if (x.b == 0) {
        if (auto r = rational_sqrt(x.a)) {
            return RealPart{*r, 0};
        }
        if (auto r = rational_sqrt(x.a / 2)) {
            return RealPart{0, *r};
        }
        return std::nullopt;
    }
    auto n = rational_sqrt(x.a * x.a - 2 * x.b * x.b);
    if (!n) {
        return std::nullopt;
    }
    for (const mpq_class &cand : {mpq_class(x.a + *n), mpq_class(x.a - *n)}) {
        auto a = rational_sqrt(cand / 2);
        if (a && *a != 0) {
            return RealPart{*a, x.b / (2 * *a)};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<RealPart, RealPart>> complex_sqrt(const RealPart &p, const RealPart &q) {
    if (q.is_zero()) {
        if (auto r = real_sqrt(p)) {
            return std::pair{*r, RealPart{}};
        }
        if (auto r = real_sqrt(RealPart{} - p)) {
            return std::pair{RealPart{}, *r};
        }
        return std::nullopt;
    }
    auto n = real_sqrt(p * p + q * q);
    if (!n) {
        return std::nullopt;
    }
    for (const RealPart &cand : {p + *n, p - *n}) {
        auto a = real_sqrt(cand / RealPart{2, 0});
        if (a && !a->is_zero()) {
            return std::pair{*a, q / (*a * RealPart{2, 0})};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Scalar> field_sqrt(const Scalar &x) {
    // With zeta = (1 + i) / sqrt 2, x = p + i q for p, q in Q(sqrt 2).
    const auto &c0 = x.coeff(0), &c1 = x.coeff(1), &c2 = x.coeff(2), &c3 = x.coeff(3);
    RealPart p{c0, (c1 - c3) / 2}, q{c2, (c1 + c3) / 2};
    auto r = complex_sqrt(p, q);
    if (!r) {
        return std::nullopt;
    }
    Scalar root2 = Scalar::zeta() - Scalar::zeta_pow(3);
    auto lift = [&](const RealPart &v) { return Scalar(v.a) + Scalar(v.b) * root2; };
    Scalar s = lift(r->first) + Scalar::imag() * lift(r->second);
    if (s * s != x) {
        return std::nullopt;
    }
    return s;
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Scalar result(1);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<int> Scalar::power_of_i() const {
    if (sgn(c_[1]) != 0 || sgn(c_[3]) != 0) {
        return std::nullopt;
    }
    if (sgn(c_[2]) == 0) {
        if (c_[0] == 1) {
            return 0;
        }
        if (c_[0] == -1) {
            return 2;
        }
        return std::nullopt;
    }
    if (sgn(c_[0]) != 0) {
        return std::nullopt;
    }
    if (c_[2] == 1) {
        return 1;
    }
    if (c_[2] == -1) {
        return 3;
    }
    return std::nullopt;
}

std::optional<int> Scalar::root_of_unity_order() const {
    // Roots of unity in Q(zeta_8) are exactly the 8th roots.
    Scalar p = *this;
    for (int k = 1; k <= 8; k++) {
        if (p.is_one()) {
            return k;
        }
        p *= *this;
    }
    return std::nullopt;
}

int Scalar::compare(const Scalar &other) const {
    for (size_t k = 0; k < 4; k++) {
        int c = cmp(c_[k], other.c_[k]);
        if (c != 0) {
            return c < 0 ? -1 : 1;
        }
    }
    return 0;
}

std::string Scalar::str() const {
    static const char *kBasis[4] = {"", "w", "i", "w^3"};
    std::vector<std::string> terms;
    for (size_t k = 0; k < 4; k++) {
        const mpq_class &q = c_[k];
        if (sgn(q) == 0) {
            continue;
        }
        if (k == 0) {
            terms.push_back(q.get_str());
        } else if (q == 1) {
            terms.push_back(kBasis[k]);
        } else if (q == -1) {
            terms.push_back(std::string("-") + kBasis[k]);
        } else {
            terms.push_back(q.get_str() + "*" + kBasis[k]);
        }
    }
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms[0];
    for (size_t k = 1; k < terms.size(); k++) {
        if (terms[k][0] == '-') {
            out += " - " + terms[k].substr(1);
        } else {
            out += " + " + terms[k];
        }
    }
    return out;
}

namespace {

// expr  := ['+'|'-'] term (('+'|'-') term)*
// term  := unary (('*'|'/') unary)*
// unary := ('+'|'-') unary | power
// power := atom ('^' ['-'] integer)?
// atom  := integer | 'i' | 'w' | '(' expr ')'
class LiteralParser {
   public:
    explicit LiteralParser(std::string_view text) : text_(text) {
    }

    Scalar parse() {
        Scalar v = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string &why) const {
        throw HolantError(ErrorKind::Parse,
                          "scalar literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        while (true) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            bool negative = accept('-');
            skip_space();
            mpz_class e = integer();
            if (e > 64) {
                fail("exponent too large");
            }
            long k = e.get_si();
            if (negative) {
                if (base.is_zero()) {
                    fail("division by zero");
                }
                k = -k;
            }
            return base.pow(k);
        }
        return base;
    }

    mpz_class integer() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Scalar atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Scalar(mpq_class(integer()));
        }
        if (c == 'i') {
            pos_++;
            return Scalar::imag();
        }
        if (c == 'w') {
            pos_++;
            return Scalar::zeta();
        }
        if (c == '(') {
            pos_++;
            Scalar v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    return LiteralParser(text).parse();
}

std::ostream &operator<<(std::ostream &out, const Scalar &s) {
    return out << s.str();
}

Scalar Mat2::at(int row, int col) const {
    if (row == 0) {
        return col == 0 ? a : b;
    }
    return col == 0 ? c : d;
}

Scalar Mat2::det() const {
    return a * d - b * c;
}

Mat2 Mat2::inverse() const {
    Scalar dt = det();
    if (dt.is_zero()) {
        throw HolantError(ErrorKind::SingularMatrix, "matrix " + str() + " has zero determinant");
    }
    Scalar inv = dt.inverse();
    return Mat2{d * inv, -b * inv, -c * inv, a * inv};
}

Mat2 Mat2::transpose() const {
    return Mat2{a, c, b, d};
}

Mat2 Mat2::operator*(const Mat2 &o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::scaled(const Scalar &s) const {
    return Mat2{a * s, b * s, c * s, d * s};
}

bool Mat2::operator==(const Mat2 &o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

bool Mat2::proportional_to(const Mat2 &o) const {
    const std::array<const Scalar *, 4> x{&a, &b, &c, &d};
    const std::array<const Scalar *, 4> y{&o.a, &o.b, &o.c, &o.d};
    int pivot = -1;
    for (int k = 0; k < 4; k++) {
        if (x[k]->is_zero() != y[k]->is_zero()) {
            return false;
        }
        if (pivot < 0 && !x[k]->is_zero()) {
            pivot = k;
        }
    }
    if (pivot < 0) {
        return false;
    }
    for (int k = 0; k < 4; k++) {
        if (*x[k] * *y[pivot] != *y[k] * *x[pivot]) {
            return false;
        }
    }
    return true;
}

DenseMatrix Mat2::tensor_power(int k) const {
    if (k < 1 || k > 8) {
        throw HolantError(ErrorKind::ArityLimit, "tensor power must be in [1, 8]");
    }
    DenseMatrix out;
    out.dim = size_t{1} << k;
    out.entries.assign(out.dim * out.dim, Scalar());
    for (size_t row = 0; row < out.dim; row++) {
        for (size_t col = 0; col < out.dim; col++) {
            Scalar v(1);
            for (int j = 0; j < k; j++) {
                int rb = static_cast<int>((row >> (k - 1 - j)) & 1);
                int cb = static_cast<int>((col >> (k - 1 - j)) & 1);
                v *= at(rb, cb);
                if (v.is_zero()) {
                    break;
                }
            }
            out.entries[row * out.dim + col] = v;
        }
    }
    return out;
}

std::array<Scalar, 2> Mat2::apply(const Scalar &v0, const Scalar &v1) const {
    return {a * v0 + b * v1, c * v0 + d * v1};
}

std::string Mat2::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

Mat2 Mat2::identity() {
    return Mat2{1, 0, 0, 1};
}

Mat2 Mat2::diag(const Scalar &x, const Scalar &y) {
    return Mat2{x, 0, 0, y};
}

std::ostream &operator<<(std::ostream &out, const Mat2 &m) {
    return out << m.str();
}

namespace mats {

Mat2 T() {
    return Mat2::diag(1, Scalar::zeta());
}

Mat2 X() {
    return Mat2{0, 1, 1, 0};
}

Mat2 K() {
    return Mat2{1, 1, Scalar::imag(), -Scalar::imag()};
}

Mat2 KX() {
    return K() * X();
}

Mat2 Z() {
    return Mat2::diag(1, -1);
}

Mat2 H() {
    return Mat2{1, 1, 1, -1};
}

Mat2 S() {
    return Mat2::diag(1, Scalar::imag());
}

}  // namespace mats

}  // namespace holant
