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

#include "holant/families.h"

#include <algorithm>
#include <bit>

#include "holant/error.h"
#include "holant/poly.h"

namespace holant {

namespace {

void require_nonzero(const Signature &f, const char *what) {
    if (f.is_zero()) {
        throw HolantError(ErrorKind::ZeroSignature, std::string(what) + " of the zero signature");
    }
}

int mod4(long v) {
    return static_cast<int>(((v % 4) + 4) % 4);
}

std::string slot_list(const std::vector<int> &slots) {
    std::string s = "{";
    for (size_t k = 0; k < slots.size(); k++) {
        s += (k ? ", " : "") + std::to_string(slots[k]);
    }
    return s + "}";
}

}  // namespace

int AffineForm::exponent(uint32_t t) const {
    int e = 0;
    int r = rank();
    for (int j = 0; j < r; j++) {
        if (!((t >> j) & 1)) {
            continue;
        }
        e += linear[static_cast<size_t>(j)];
        for (int k = j + 1; k < r; k++) {
            if (((t >> k) & 1) && quadratic[static_cast<size_t>(j)][static_cast<size_t>(k)]) {
                e += 2;
            }
        }
    }
    return e % 4;
}

uint32_t AffineForm::point(uint32_t t) const {
    uint32_t x = offset;
    for (size_t j = 0; j < basis.size(); j++) {
        if ((t >> j) & 1) {
            x ^= basis[j];
        }
    }
    return x;
}

Signature AffineForm::to_signature() const {
    std::vector<Scalar> v(size_t{1} << arity);
    for (uint32_t t = 0; t < (uint32_t{1} << rank()); t++) {
        v[point(t)] = prefactor * Scalar::zeta_pow(2L * exponent(t));
    }
    return Signature(arity, std::move(v));
}

std::optional<AffineForm> is_affine(const Signature &f) {
    require_nonzero(f, "is_affine");
    std::vector<size_t> support = f.support();
    uint32_t x0 = static_cast<uint32_t>(support.front());
    std::vector<uint32_t> basis;
    std::vector<int> pivots;
    for (size_t s : support) {
        uint32_t d = static_cast<uint32_t>(s) ^ x0;
        for (size_t j = 0; j < basis.size(); j++) {
            if ((d >> pivots[j]) & 1) {
                d ^= basis[j];
            }
        }
        if (d == 0) {
            continue;
        }
        int p = 31 - std::countl_zero(d);
        for (size_t j = 0; j < basis.size(); j++) {
            if ((basis[j] >> p) & 1) {
                basis[j] ^= d;
            }
        }
        basis.push_back(d);
        pivots.push_back(p);
    }
    if (support.size() != (size_t{1} << basis.size())) {
        return std::nullopt;
    }
    // Order free variables by pivot, lowest slot (highest bit) first.
    std::vector<size_t> order(basis.size());
    for (size_t j = 0; j < order.size(); j++) {
        order[j] = j;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots[a] > pivots[b]; });
    AffineForm form;
    form.arity = f.arity();
    for (size_t j : order) {
        form.basis.push_back(basis[j]);
        form.pivots.push_back(pivots[j]);
    }
    form.offset = x0;
    for (size_t j = 0; j < form.basis.size(); j++) {
        if ((form.offset >> form.pivots[j]) & 1) {
            form.offset ^= form.basis[j];
        }
    }
    form.prefactor = f[form.offset];
    Scalar inv = form.prefactor.inverse();
    int r = form.rank();
    std::vector<long> e(size_t{1} << r);
    for (uint32_t t = 0; t < e.size(); t++) {
        auto k = (f[form.point(t)] * inv).power_of_i();
        if (!k) {
            return std::nullopt;
        }
        e[t] = *k;
    }
    // Integer Moebius inversion gives the multilinear coefficients of e.
    for (int j = 0; j < r; j++) {
        for (uint32_t t = 0; t < e.size(); t++) {
            if ((t >> j) & 1) {
                e[t] -= e[t ^ (uint32_t{1} << j)];
            }
        }
    }
    for (uint32_t t = 0; t < e.size(); t++) {
        int w = std::popcount(t);
        if ((w >= 3 && mod4(e[t]) != 0) || (w == 2 && mod4(e[t]) % 2 != 0)) {
            return std::nullopt;
        }
    }
    form.linear.resize(static_cast<size_t>(r));
    form.quadratic.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
    for (int j = 0; j < r; j++) {
        form.linear[static_cast<size_t>(j)] = mod4(e[uint32_t{1} << j]);
        for (int k = j + 1; k < r; k++) {
            form.quadratic[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                mod4(e[(uint32_t{1} << j) | (uint32_t{1} << k)]) / 2;
        }
    }
    return form;
}

bool in_E(const Signature &f) {
    require_nonzero(f, "in_E");
    auto support = f.support();
    size_t mask = f.size() - 1;
    size_t x = support.front();
    return std::all_of(support.begin(), support.end(), [&](size_t s) { return s == x || s == (x ^ mask); });
}

bool in_M(const Signature &f) {
    require_nonzero(f, "in_M");
    auto support = f.support();
    return std::all_of(support.begin(), support.end(), [](size_t s) { return std::popcount(s) <= 1; });
}

bool in_T(const Signature &f) {
    auto factors = tensor_factorize(f);
    return std::all_of(factors.begin(), factors.end(), [](const Factor &fac) { return fac.sig.arity() <= 2; });
}

bool in_L(const Signature &f) {
    require_nonzero(f, "in_L");
    for (size_t x : f.support()) {
        Signature g = f;
        for (int s = 0; s < f.arity(); s++) {
            if (f.bit(x, s)) {
                g = apply_local(g, s, mats::T());
            }
        }
        if (!is_affine(g)) {
            return false;
        }
    }
    return true;
}

bool is_in_cS(const Mat2 &s) {
    if (!s.is_invertible()) {
        throw HolantError(ErrorKind::SingularMatrix, "is_in_cS needs an invertible matrix");
    }
    Mat2 st = s.transpose();
    return is_affine(holographic_transform(st, sigs::equality(2))).has_value() &&
           is_affine(holographic_transform(st, sigs::delta0())).has_value() &&
           is_affine(holographic_transform(st, sigs::delta1())).has_value();
}

const char *membership_name(Membership m) {
    switch (m) {
        case Membership::Member:
            return "member";
        case Membership::NotMember:
            return "not-member";
        case Membership::Unknown:
            return "unknown";
    }
    return "?";
}

FamilyVerdict in_T_closure(std::span<const Signature> set) {
    FamilyVerdict v;
    v.family = "T";
    for (size_t k = 0; k < set.size(); k++) {
        require_nonzero(set[k], "in_T_closure");
        for (const auto &fac : tensor_factorize(set[k])) {
            if (fac.sig.arity() > 2) {
                v.member = Membership::NotMember;
                v.failing_index = static_cast<int>(k);
                v.reason = "signature " + std::to_string(k) + " has a genuinely entangled factor of arity " +
                           std::to_string(fac.sig.arity()) + " on slots " + slot_list(fac.slots);
                return v;
            }
        }
    }
    v.member = Membership::Member;
    return v;
}

FamilyVerdict in_transformed_closure(std::span<const Signature> set, const Mat2 &m, BaseFamily family) {
    Mat2 minv = m.inverse();
    FamilyVerdict v;
    v.family = family == BaseFamily::E ? "E" : "M";
    v.transform = m;
    for (size_t k = 0; k < set.size(); k++) {
        require_nonzero(set[k], "in_transformed_closure");
        for (const auto &fac : tensor_factorize(set[k])) {
            if (fac.sig.arity() < 2) {
                continue;
            }
            Signature g = holographic_transform(minv, fac.sig);
            bool ok = family == BaseFamily::E ? in_E(g) : in_M(g);
            if (!ok) {
                v.member = Membership::NotMember;
                v.transform.reset();
                v.failing_index = static_cast<int>(k);
                v.reason = "signature " + std::to_string(k) + ": factor on slots " + slot_list(fac.slots) +
                           " is not in the transformed family (m^-1 o g = " + g.str() + ")";
                return v;
            }
        }
    }
    v.member = Membership::Member;
    return v;
}

namespace {

// (O^T)^{(x)n} g with O^T = [[1, t], [-t, 1]], entries as polynomials in t.
std::vector<Poly> rotate_symbolic(const Signature &g) {
    std::vector<Poly> h(g.size());
    for (size_t x = 0; x < g.size(); x++) {
        h[x] = Poly::constant(g[x]);
    }
    Poly t = Poly::monomial(1, 1);
    int n = g.arity();
    for (int s = 0; s < n; s++) {
        size_t stride = size_t{1} << (n - 1 - s);
        for (size_t x = 0; x < h.size(); x++) {
            if (x & stride) {
                continue;
            }
            Poly v0 = h[x], v1 = h[x | stride];
            h[x] = v0 + t * v1;
            h[x | stride] = v1 - t * v0;
        }
    }
    return h;
}

// Polynomial whose roots are exactly the t putting this factor into E;
// nullopt when every t works.
std::optional<Poly> orthogonal_constraint(const Signature &g) {
    std::vector<Poly> h = rotate_symbolic(g);
    size_t mask = h.size() - 1;
    Poly acc = Poly::constant(1);
    for (size_t x = 0; x < h.size(); x++) {
        size_t xb = x ^ mask;
        if (xb < x) {
            continue;
        }
        Poly gp;
        bool constant = false;
        for (size_t y = 0; y < h.size() && !constant; y++) {
            if (y == x || y == xb || h[y].is_zero()) {
                continue;
            }
            gp = gcd(gp, h[y]);
            constant = gp.degree() == 0;
        }
        if (gp.is_zero()) {
            return std::nullopt;
        }
        if (!constant) {
            acc = lcm(acc, gp);
        }
    }
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0 || n > 1000000000000L) {
        return out;
    }
    for (mpz_class k = 1; k * k <= n; k++) {
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n) {
                out.push_back(n / k);
            }
        }
    }
    return out;
}

// Some root of p lying in the field, found by the closed form for degree
// at most two or the rational root test for rational polynomials.
std::optional<Scalar> find_field_root(const Poly &p) {
    const auto &c = p.coeffs();
    if (p.degree() == 1) {
        return -c[0] / c[1];
    }
    if (p.degree() == 2) {
        auto s = field_sqrt(c[1] * c[1] - Scalar(4) * c[0] * c[2]);
        if (s) {
            return (-c[1] + *s) / (Scalar(2) * c[2]);
        }
        return std::nullopt;
    }
    if (!std::all_of(c.begin(), c.end(), [](const Scalar &x) { return x.is_rational(); })) {
        return std::nullopt;
    }
    mpz_class scale = 1;
    for (const auto &x : c) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.coeff(0).get_den_mpz_t());
    }
    mpz_class lead = mpq_class(c.back().coeff(0) * scale).get_num();
    mpz_class low = mpq_class(c.front().coeff(0) * scale).get_num();
    for (const auto &a : divisors(low)) {
        for (const auto &b : divisors(lead)) {
            for (int sign : {1, -1}) {
                Scalar t(mpq_class(a * sign, b));
                if (p.eval(t).is_zero()) {
                    return t;
                }
            }
        }
    }
    return std::nullopt;
}

Poly strip_root(Poly p, const Scalar &root) {
    Poly lin(std::vector<Scalar>{-root, 1});
    while (p.degree() >= 1 && p.eval(root).is_zero()) {
        p = p.divmod(lin).first;
    }
    return p;
}

}  // namespace

FamilyVerdict exists_orthogonal_O(std::span<const Signature> set) {
    FamilyVerdict v;
    v.family = "OE";
    std::optional<Poly> common;
    Scalar i = Scalar::imag();
    for (size_t k = 0; k < set.size(); k++) {
        require_nonzero(set[k], "exists_orthogonal_O");
        for (const auto &fac : tensor_factorize(set[k])) {
            if (fac.sig.arity() < 2) {
                continue;
            }
            auto c = orthogonal_constraint(fac.sig);
            if (!c) {
                continue;
            }
            common = common ? gcd(*common, *c) : c->monic();
            common = strip_root(strip_root(*common, i), -i);
            if (common->degree() < 1) {
                v.member = Membership::NotMember;
                v.failing_index = static_cast<int>(k);
                v.reason = "no complex orthogonal O puts signatures 0.." + std::to_string(k) +
                           " into <O o E> simultaneously";
                return v;
            }
        }
    }
    v.member = Membership::Member;
    if (!common || common->eval(0).is_zero()) {
        v.transform = Mat2::identity();
        v.witness = "O = identity";
        return v;
    }
    if (auto t = find_field_root(*common)) {
        v.transform = Mat2{1, -*t, *t, 1};
        v.witness = "O proportional to [[1, -t], [t, 1]] with t = " + t->str();
    } else {
        v.witness = "O proportional to [[1, -t], [t, 1]] with t a root of " + common->str();
    }
    return v;
}

FamilyVerdict in_A(std::span<const Signature> set) {
    FamilyVerdict v;
    v.family = "A";
    for (size_t k = 0; k < set.size(); k++) {
        if (!is_affine(set[k])) {
            v.member = Membership::NotMember;
            v.failing_index = static_cast<int>(k);
            v.reason = "signature " + std::to_string(k) + " is not affine";
            return v;
        }
    }
    v.member = Membership::Member;
    return v;
}

FamilyVerdict in_L_set(std::span<const Signature> set) {
    FamilyVerdict v;
    v.family = "L";
    for (size_t k = 0; k < set.size(); k++) {
        if (!in_L(set[k])) {
            v.member = Membership::NotMember;
            v.failing_index = static_cast<int>(k);
            v.reason = "signature " + std::to_string(k) + " has a support string whose T-twist is not affine";
            return v;
        }
    }
    v.member = Membership::Member;
    return v;
}

namespace {

void push_unique(std::vector<Mat2> &list, const Mat2 &m) {
    for (const auto &x : list) {
        if (x.proportional_to(m)) {
            return;
        }
    }
    list.push_back(m);
}

}  // namespace

std::vector<Mat2> named_cS_candidates() {
    std::vector<Mat2> base{Mat2::identity(), mats::X(), mats::T(), mats::T() * mats::X(), mats::K(),
                           mats::KX(),       mats::S(), mats::Z(), mats::H()};
    std::vector<Mat2> all;
    for (const auto &m : base) {
        push_unique(all, m);
    }
    for (const auto &a : base) {
        for (const auto &b : base) {
            push_unique(all, a * b);
        }
    }
    std::vector<Mat2> out;
    for (const auto &m : all) {
        if (is_in_cS(m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<Mat2> enumerate_cS() {
    const Scalar i = Scalar::imag();
    // The affine unary directions: S^T|0> and S^T|1> must be among these.
    const std::vector<std::array<Scalar, 2>> dirs{{1, 0}, {0, 1}, {1, 1}, {1, i}, {1, -1}, {1, -i}};
    const Scalar sqrt2 = Scalar::zeta() - Scalar::zeta_pow(3);
    std::vector<Scalar> roots;
    for (int k = 0; k < 8; k++) {
        Scalar z = Scalar::zeta_pow(k);
        Scalar s = z;
        roots.push_back(z);
        for (int m = 1; m <= 4; m++) {
            s = s * sqrt2;
            roots.push_back(s);
        }
        s = z;
        for (int m = 1; m <= 4; m++) {
            s = s / sqrt2;
            roots.push_back(s);
        }
    }
    std::vector<Mat2> out;
    for (const auto &u : dirs) {
        for (const auto &v : dirs) {
            if ((u[0] * v[1] - u[1] * v[0]).is_zero()) {
                continue;
            }
            // Entries of t * u(x)u + v(x)v are t * p[ab] + q[ab].
            Scalar p[4], q[4];
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    p[2 * a + b] = u[static_cast<size_t>(a)] * u[static_cast<size_t>(b)];
                    q[2 * a + b] = v[static_cast<size_t>(a)] * v[static_cast<size_t>(b)];
                }
            }
            std::vector<Scalar> ts;
            auto add_t = [&](const Scalar &t) {
                if (!t.is_zero() && std::find(ts.begin(), ts.end(), t) == ts.end()) {
                    ts.push_back(t);
                }
            };
            for (int ab = 0; ab < 4; ab++) {
                if (!p[ab].is_zero()) {
                    add_t(-q[ab] / p[ab]);
                }
            }
            for (int ab = 0; ab < 4; ab++) {
                for (int cd = ab + 1; cd < 4; cd++) {
                    for (int k = 0; k < 4; k++) {
                        Scalar ik = Scalar::zeta_pow(2 * k);
                        Scalar coef = p[ab] - ik * p[cd];
                        if (!coef.is_zero()) {
                            add_t((ik * q[cd] - q[ab]) / coef);
                        }
                    }
                }
            }
            for (const auto &t : ts) {
                std::vector<Scalar> vals(4);
                for (int ab = 0; ab < 4; ab++) {
                    vals[static_cast<size_t>(ab)] = t * p[ab] + q[ab];
                }
                Signature eq2(2, vals);
                if (eq2.is_zero() || !is_affine(eq2)) {
                    continue;
                }
                auto r = std::find_if(roots.begin(), roots.end(), [&](const Scalar &x) { return x * x == t; });
                if (r == roots.end()) {
                    throw HolantError(ErrorKind::InternalCaseGap, "column-scale ratio " + t.str() +
                                                                      " has no square root in the field");
                }
                for (const Scalar &rr : {*r, -*r}) {
                    Mat2 s{rr * u[0], rr * u[1], v[0], v[1]};
                    if (is_in_cS(s)) {
                        push_unique(out, s);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Mat2> default_cS_candidates() {
    std::vector<Mat2> out = named_cS_candidates();
    for (const auto &m : enumerate_cS()) {
        push_unique(out, m);
    }
    return out;
}

FamilyVerdict exists_S_in_cS(std::span<const Signature> set, std::span<const Mat2> candidates, bool exhaustive) {
    FamilyVerdict v;
    v.family = "SA";
    for (const auto &f : set) {
        require_nonzero(f, "exists_S_in_cS");
    }
    for (const auto &s : candidates) {
        if (!s.is_invertible() || !is_in_cS(s)) {
            continue;
        }
        Mat2 sinv = s.inverse();
        bool ok = std::all_of(set.begin(), set.end(),
                              [&](const Signature &f) { return is_affine(holographic_transform(sinv, f)).has_value(); });
        if (ok) {
            v.member = Membership::Member;
            v.transform = s;
            v.witness = "S = " + s.str();
            return v;
        }
    }
    v.member = exhaustive ? Membership::NotMember : Membership::Unknown;
    v.reason = exhaustive ? "no S in the full enumeration of S maps the set into A"
                          : "none of the supplied candidates maps the set into A (candidate list is not exhaustive)";
    return v;
}

FamilyVerdict exists_S_in_cS(std::span<const Signature> set) {
    static const std::vector<Mat2> candidates = default_cS_candidates();
    return exists_S_in_cS(set, candidates, true);
}

FamilyVerdict holant_star_tractable(std::span<const Signature> set) {
    std::vector<std::string> reasons;
    auto t = in_T_closure(set);
    if (t.is_member()) {
        return t;
    }
    reasons.push_back("T: " + t.reason);
    auto oe = exists_orthogonal_O(set);
    if (oe.member != Membership::NotMember) {
        return oe;
    }
    reasons.push_back("OE: " + oe.reason);
    auto ke = in_transformed_closure(set, mats::K(), BaseFamily::E);
    if (ke.is_member()) {
        ke.family = "KE";
        return ke;
    }
    reasons.push_back("KE: " + ke.reason);
    auto km = in_transformed_closure(set, mats::K(), BaseFamily::M);
    if (km.is_member()) {
        km.family = "KM";
        return km;
    }
    reasons.push_back("KM: " + km.reason);
    auto kxm = in_transformed_closure(set, mats::KX(), BaseFamily::M);
    if (kxm.is_member()) {
        kxm.family = "KXM";
        return kxm;
    }
    reasons.push_back("KXM: " + kxm.reason);
    FamilyVerdict v;
    v.family = "holant-star";
    v.member = Membership::NotMember;
    for (const auto &r : reasons) {
        v.reason += (v.reason.empty() ? "" : "; ") + r;
    }
    return v;
}

namespace {

// A primitive (3t)-th root of unity with gcd(t, 3) = 1.
bool bad_cube_root_ratio(const Scalar &num, const Scalar &den) {
    if (den.is_zero()) {
        return false;
    }
    auto ord = (num / den).root_of_unity_order();
    return ord && *ord % 3 == 0 && *ord % 9 != 0;
}

}  // namespace

bool is_omega_normalised(const Signature &f) {
    if (f.arity() == 1) {
        return !bad_cube_root_ratio(f[1], f[0]);
    }
    auto sym = symmetric_shorthand(f);
    if (f.arity() != 2 || !sym) {
        throw HolantError(ErrorKind::PreconditionViolated, "omega-normalisation needs a unary or symmetric binary");
    }
    return !bad_cube_root_ratio((*sym)[2], (*sym)[0]);
}

std::pair<Signature, Mat2> omega_normalise(const Signature &f) {
    if (is_omega_normalised(f)) {
        return {f, Mat2::identity()};
    }
    // Roots of unity in Q(zeta_8) have order dividing 8, so this is unreachable.
    throw HolantError(ErrorKind::InternalCaseGap, "omega-normalisation needs a cube root of unity outside the field");
}

}  // namespace holant
