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

#include "holant/poly.h"

#include "holant/error.h"

namespace holant {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(const Scalar &c) {
    return Poly(std::vector<Scalar>{c});
}

Poly Poly::monomial(const Scalar &c, int k) {
    std::vector<Scalar> v(static_cast<size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Poly Poly::operator+(const Poly &o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.size(); k++) {
        if (k < c_.size()) {
            r[k] += c_[k];
        }
        if (k < o.c_.size()) {
            r[k] += o.c_[k];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Scalar> r = c_;
    for (auto &x : r) {
        x = -x;
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly &o) const {
    return *this + (-o);
}

Poly Poly::operator*(const Poly &o) const {
    if (is_zero() || o.is_zero()) {
        return Poly();
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
    for (size_t j = 0; j < c_.size(); j++) {
        if (c_[j].is_zero()) {
            continue;
        }
        for (size_t k = 0; k < o.c_.size(); k++) {
            if (!o.c_[k].is_zero()) {
                r[j + k] += c_[j] * o.c_[k];
            }
        }
    }
    return Poly(std::move(r));
}

Scalar Poly::eval(const Scalar &t) const {
    Scalar acc;
    for (size_t k = c_.size(); k-- > 0;) {
        acc = acc * t + c_[k];
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    Scalar inv = leading().inverse();
    std::vector<Scalar> r = c_;
    for (auto &x : r) {
        x *= inv;
    }
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly &d) const {
    if (d.is_zero()) {
        throw HolantError(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    std::vector<Scalar> rem = c_;
    int dd = d.degree();
    if (degree() < dd) {
        return {Poly(), *this};
    }
    std::vector<Scalar> q(static_cast<size_t>(degree() - dd) + 1);
    Scalar inv = d.leading().inverse();
    for (int k = degree(); k >= dd; k--) {
        const Scalar &lead = rem[static_cast<size_t>(k)];
        if (lead.is_zero()) {
            continue;
        }
        Scalar f = lead * inv;
        q[static_cast<size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; j++) {
            rem[static_cast<size_t>(k - dd + j)] -= f * d.c_[static_cast<size_t>(j)];
        }
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string &var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) {
            continue;
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string coef = c_[k].str();
        std::string term;
        if (mono.empty()) {
            term = coef.find(' ') != std::string::npos ? "(" + coef + ")" : coef;
        } else if (c_[k].is_one()) {
            term = mono;
        } else if ((-c_[k]).is_one()) {
            term = "-" + mono;
        } else {
            term = (coef.find(' ') != std::string::npos ? "(" + coef + ")" : coef) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Poly gcd(const Poly &a, const Poly &b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        throw HolantError(ErrorKind::PreconditionViolated, "lcm of the zero polynomial");
    }
    return (a * b).divmod(gcd(a, b)).first.monic();
}

}  // namespace holant
