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

#ifndef HOLANT_POLY_H
#define HOLANT_POLY_H

#include <string>
#include <vector>

#include "holant/algebra.h"

namespace holant {

/// Univariate polynomial over Q(zeta_8), coefficients from degree 0 upward,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    static Poly constant(const Scalar &c);
    /// The monomial c * t^k.
    static Poly monomial(const Scalar &c, int k);

    int degree() const {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const {
        return c_.empty();
    }
    const std::vector<Scalar> &coeffs() const {
        return c_;
    }
    const Scalar &leading() const {
        return c_.back();
    }

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly operator-() const;
    bool operator==(const Poly &o) const {
        return c_ == o.c_;
    }

    Scalar eval(const Scalar &t) const;
    Poly monic() const;
    /// Quotient and remainder; divisor must be non-zero.
    std::pair<Poly, Poly> divmod(const Poly &d) const;

    std::string str(const std::string &var = "t") const;

   private:
    void trim();
    std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);
/// Monic lcm of non-zero polynomials.
Poly lcm(const Poly &a, const Poly &b);

}  // namespace holant

#endif
