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

#include "holant/dichotomy.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "holant/entanglement.h"
#include "holant/error.h"

namespace holant {

const char *step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::Pin:
            return "Pin";
        case StepKind::SelfLoop:
            return "SelfLoop";
        case StepKind::ApplyUnary:
            return "ApplyUnary";
        case StepKind::TriangleGadget:
            return "TriangleGadget";
        case StepKind::ChainGadget:
            return "ChainGadget";
        case StepKind::HolographicTransform:
            return "HolographicTransform";
        case StepKind::Factor:
            return "Factor";
        case StepKind::TheoremTerminal:
            return "TheoremTerminal";
    }
    return "?";
}

StepKind parse_step_kind(const std::string &name) {
    for (auto k : {StepKind::Pin, StepKind::SelfLoop, StepKind::ApplyUnary, StepKind::TriangleGadget,
                   StepKind::ChainGadget, StepKind::HolographicTransform, StepKind::Factor, StepKind::TheoremTerminal}) {
        if (name == step_kind_name(k)) {
            return k;
        }
    }
    throw HolantError(ErrorKind::Parse, "unknown step kind '" + name + "'");
}

std::string terminal_citation(const std::string &theorem) {
    if (theorem == "ghz-csp") {
        return "symmetric GHZ-type ternary: Holant^c is equivalent to #CSP of the transformed set, hard outside "
               "<O o E>, <K o E> and S o A";
    }
    if (theorem == "w-hard") {
        return "symmetric W-type ternary outside K o M and KX o M: Holant([y0,y1,y2] | [x0,x1,x2,x3]) is #P-hard "
               "with y = =2";
    }
    if (theorem == "w-binary") {
        return "symmetric W-type ternary in K o M (or KX o M) with a symmetric non-degenerate binary outside the "
               "same class: Holant([y0,y1,y2] | [x0,x1,x2,x3]) is #P-hard";
    }
    if (theorem == "generalized-eq4") {
        return "a 4-ary generalised equality makes Holant equivalent to #CSP_2, hard outside <E>, A, T o A and L";
    }
    if (theorem == "interpolate-eq4") {
        return "a|0000> + b|0011> + c|1100> + d|1111> of full rank interpolates =4, then the generalised-equality "
               "reduction to #CSP_2 applies";
    }
    return "";
}

const char *verdict_tag_name(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::Tractable:
            return "Tractable";
        case VerdictTag::Hard:
            return "Hard";
        case VerdictTag::Unknown:
            return "Unknown";
    }
    return "?";
}

FamilyVerdict tractability_screen(std::span<const Signature> set, const ClassifyOptions &options) {
    auto renamed = [](FamilyVerdict v, const char *name) {
        v.family = name;
        return v;
    };
    std::vector<std::function<FamilyVerdict()>> screens{
        [&] { return in_T_closure(set); },
        [&] { return in_A(set); },
        [&] {
            return options.cs_candidates ? exists_S_in_cS(set, *options.cs_candidates, false) : exists_S_in_cS(set);
        },
        [&] { return in_L_set(set); },
        [&] { return exists_orthogonal_O(set); },
        [&] { return renamed(in_transformed_closure(set, mats::K(), BaseFamily::E), "KE"); },
        [&] { return renamed(in_transformed_closure(set, mats::K(), BaseFamily::M), "KM"); },
        [&] { return renamed(in_transformed_closure(set, mats::KX(), BaseFamily::M), "KXM"); },
    };
    std::string unknown;
    for (auto &screen : screens) {
        FamilyVerdict v = screen();
        if (v.member == Membership::Member) {
            return v;
        }
        if (v.member == Membership::Unknown && unknown.empty()) {
            unknown = v.family + ": " + v.reason;
        }
    }
    FamilyVerdict out;
    out.family = "none";
    if (!unknown.empty()) {
        out.member = Membership::Unknown;
        out.reason = "inconclusive screen " + unknown;
    } else {
        out.member = Membership::NotMember;
        out.reason = "no tractable family contains the set";
    }
    return out;
}

namespace {

bool is_symmetric(const Signature &f) {
    return symmetric_shorthand(f).has_value();
}

bool in_class_M(const Signature &f, const Mat2 &m) {
    std::vector<Signature> one{f};
    return in_transformed_closure(one, m, BaseFamily::M).is_member();
}

bool genuinely_entangled_ternary(const Signature &f) {
    return f.arity() == 3 && !f.is_zero() && ternary_class(f).tag != TernaryTag::NotGenuine;
}

bool is_generalized_equality(const Signature &f) {
    auto support = f.support();
    return f.arity() >= 1 && support.size() == 2 && (support[0] ^ support[1]) == f.size() - 1;
}

[[noreturn]] void case_gap(const std::string &what) {
    throw HolantError(ErrorKind::InternalCaseGap, what);
}

Signature replay(const GadgetSpec &spec, const std::map<std::string, Signature> &env) {
    SignatureGrid g;
    for (const auto &name : spec.vertices) {
        auto it = env.find(name);
        if (it == env.end()) {
            throw HolantError(ErrorKind::InvalidGrid, "unknown signature reference '" + name + "'");
        }
        g.add_vertex(it->second);
    }
    for (const auto &e : spec.edges) {
        g.connect(e.a, e.b);
    }
    for (const auto &d : spec.dangling) {
        g.add_dangling(d);
    }
    g.validate();
    return gadget_signature(g);
}

// M with M^{(x)3} f supported on {000, 111}, for symmetric GHZ-type f, when
// the decomposition f = alpha u^3 + beta v^3 exists over the field. The
// columns of M^{-1} are u, v; two roots s, t are put in increasing order.
std::optional<Mat2> ghz_normal_form(const Signature &f) {
    auto w = symmetric_shorthand(f);
    if (!w || f.arity() != 3) {
        return std::nullopt;
    }
    const Scalar &f0 = (*w)[0], &f1 = (*w)[1], &f2 = (*w)[2], &f3 = (*w)[3];
    std::array<Scalar, 2> u, v;
    Scalar det = f0 * f2 - f1 * f1;
    if (!det.is_zero()) {
        // f_k = alpha s^k + beta t^k obeys f_{k+2} = (s + t) f_{k+1} - s t f_k.
        Scalar sigma = (f0 * f3 - f1 * f2) / det;
        Scalar pi = (f1 * f3 - f2 * f2) / det;
        auto root = field_sqrt(sigma * sigma - Scalar(4) * pi);
        if (!root || root->is_zero()) {
            return std::nullopt;
        }
        u = {1, (sigma + *root) / Scalar(2)};
        v = {1, (sigma - *root) / Scalar(2)};
        if (v[1].compare(u[1]) < 0) {
            std::swap(u, v);
        }
    } else if (!f0.is_zero()) {
        u = {1, f1 / f0};
        v = {0, 1};
    } else {
        return std::nullopt;
    }
    Mat2 inv{u[0], v[0], u[1], v[1]};
    if (!inv.is_invertible()) {
        return std::nullopt;
    }
    Mat2 m = inv.inverse();
    Signature g = holographic_transform(m, f);
    auto support = g.support();
    if (support != std::vector<size_t>{0, 7}) {
        return std::nullopt;
    }
    return m;
}

// The unary side condition needed when the transformed =2 is off-diagonal.
bool ghz_side_condition(const Mat2 &m) {
    Mat2 n = m.inverse().transpose();
    Signature y = holographic_transform(n, sigs::equality(2));
    if (!(y[0].is_zero() && y[3].is_zero())) {
        return is_omega_normalised(y);
    }
    for (const auto &pin : {sigs::delta0(), sigs::delta1()}) {
        Signature u = holographic_transform(n, pin);
        if (!u[0].is_zero() && !u[1].is_zero() && is_omega_normalised(u)) {
            return true;
        }
    }
    return false;
}

Signature normalise_block_form(const Signature &g, int flip_mask) {
    std::vector<Scalar> vals(g.size());
    for (size_t x = 0; x < g.size(); x++) {
        vals[x ^ static_cast<size_t>(flip_mask)] = g[x];
    }
    return Signature(g.arity(), std::move(vals));
}

// nullopt if every side condition holds; otherwise the failure.
std::optional<std::string> check_terminal(const ReductionStep &step, const std::map<std::string, Signature> &env,
                                          std::span<const Signature> set) {
    std::vector<Signature> refs;
    for (const auto &r : step.refs) {
        auto it = env.find(r);
        if (it == env.end()) {
            return "unknown reference '" + r + "'";
        }
        refs.push_back(it->second);
    }
    auto need = [&](size_t n) { return refs.size() == n; };
    if (step.theorem == "ghz-csp") {
        if (!need(1) || refs[0].arity() != 3 || !is_symmetric(refs[0]) ||
            ternary_class(refs[0]).tag != TernaryTag::GHZ) {
            return std::string("ghz-csp needs one symmetric GHZ-type ternary signature");
        }
        auto m = ghz_normal_form(refs[0]);
        if (step.matrix) {
            if (!step.matrix->is_invertible() ||
                holographic_transform(*step.matrix, refs[0]).support() != std::vector<size_t>{0, 7}) {
                return std::string("the recorded M does not map the signature to a generalised equality");
            }
            if (!ghz_side_condition(*step.matrix)) {
                return std::string("the transformed binary equality is off-diagonal and no pin is usable");
            }
        } else if (m) {
            return std::string("an in-field normal form exists but was not recorded");
        }
    } else if (step.theorem == "w-hard") {
        if (!need(1) || refs[0].arity() != 3 || !is_symmetric(refs[0]) || ternary_class(refs[0]).tag != TernaryTag::W) {
            return std::string("w-hard needs one symmetric W-type ternary signature");
        }
        if (in_class_M(refs[0], mats::K()) || in_class_M(refs[0], mats::KX())) {
            return std::string("the W-type signature lies in K o M or KX o M");
        }
    } else if (step.theorem == "w-binary") {
        if (!need(2) || !step.matrix || (*step.matrix != mats::K() && *step.matrix != mats::KX())) {
            return std::string("w-binary needs a ternary, a binary and the matrix K or KX");
        }
        const Signature &x = refs[0], &y = refs[1];
        if (x.arity() != 3 || !is_symmetric(x) || ternary_class(x).tag != TernaryTag::W ||
            !in_class_M(x, *step.matrix)) {
            return std::string("the ternary is not a symmetric W-type member of the class");
        }
        if (y.arity() != 2 || !is_symmetric(y) || binary_det(y).is_zero() || in_class_M(y, *step.matrix)) {
            return std::string("the binary is not symmetric, non-degenerate and outside the class");
        }
    } else if (step.theorem == "generalized-eq4") {
        if (!need(1) || refs[0].arity() != 4 || !is_generalized_equality(refs[0])) {
            return std::string("generalized-eq4 needs a 4-ary generalised equality");
        }
    } else if (step.theorem == "interpolate-eq4") {
        if (!need(1) || refs[0].arity() != 4) {
            return std::string("interpolate-eq4 needs one 4-ary signature");
        }
        try {
            if (!interpolate_eq4_reduction(normalise_block_form(refs[0], step.flip_mask)).ok()) {
                return std::string("the interpolation demonstration failed");
            }
        } catch (const HolantError &e) {
            return std::string(e.what());
        }
    } else {
        return "unknown terminal '" + step.theorem + "'";
    }
    FamilyVerdict screen = tractability_screen(set);
    if (screen.member != Membership::NotMember) {
        return "the set is not excluded from every tractable family (" + screen.family + ")";
    }
    return std::nullopt;
}

// Environment of realised signatures plus the certificate steps that built them.
class Builder {
   public:
    explicit Builder(std::span<const Signature> set) : set_(set.begin(), set.end()) {
        for (size_t k = 0; k < set_.size(); k++) {
            env_["F" + std::to_string(k)] = set_[k];
        }
        env_["delta0"] = sigs::delta0();
        env_["delta1"] = sigs::delta1();
    }

    const Signature &get(const std::string &ref) const {
        return env_.at(ref);
    }
    const std::vector<Signature> &set() const {
        return set_;
    }
    Signature preview(const GadgetSpec &spec) const {
        return replay(spec, env_);
    }

    std::string gadget(StepKind kind, GadgetSpec spec, std::string note) {
        ReductionStep step;
        step.kind = kind;
        step.output = "g" + std::to_string(counter_++);
        step.claimed_output = replay(spec, env_);
        step.gadget = std::move(spec);
        step.note = std::move(note);
        env_[step.output] = *step.claimed_output;
        cert_.steps.push_back(step);
        return step.output;
    }

    void view(const std::string &input, const Mat2 &m, std::string note) {
        ReductionStep step;
        step.kind = StepKind::HolographicTransform;
        step.output = "g" + std::to_string(counter_++);
        step.input = input;
        step.matrix = m;
        step.claimed_output = holographic_transform(m, get(input));
        step.note = std::move(note);
        views_.insert(step.output);
        cert_.steps.push_back(step);
    }

    Verdict terminal(const std::string &theorem, std::vector<std::string> refs, std::optional<Mat2> matrix = {},
                     int flip_mask = 0) {
        ReductionStep step;
        step.kind = StepKind::TheoremTerminal;
        step.theorem = theorem;
        step.citation = terminal_citation(theorem);
        step.refs = std::move(refs);
        step.matrix = std::move(matrix);
        step.flip_mask = flip_mask;
        if (auto failure = check_terminal(step, env_, set_)) {
            case_gap("terminal " + theorem + " rejected: " + *failure);
        }
        cert_.steps.push_back(step);
        Verdict v;
        v.tag = VerdictTag::Hard;
        v.certificate = cert_;
        v.reason = "hard via " + theorem;
        return v;
    }

   private:
    std::vector<Signature> set_;
    std::map<std::string, Signature> env_;
    std::set<std::string> views_;
    Certificate cert_;
    int counter_ = 0;
};

// Gadget shapes.

GadgetSpec spec_pin(const std::string &ref, int arity, const std::vector<std::pair<int, int>> &pins,
                    std::vector<int> dangling = {}) {
    GadgetSpec s;
    s.vertices.push_back(ref);
    std::vector<bool> pinned(static_cast<size_t>(arity), false);
    for (auto [slot, bit] : pins) {
        int v = static_cast<int>(s.vertices.size());
        s.vertices.push_back(bit ? "delta1" : "delta0");
        s.edges.push_back({{0, slot}, {v, 0}});
        pinned[static_cast<size_t>(slot)] = true;
    }
    if (dangling.empty()) {
        for (int k = 0; k < arity; k++) {
            if (!pinned[static_cast<size_t>(k)]) {
                dangling.push_back(k);
            }
        }
    }
    for (int k : dangling) {
        s.dangling.push_back({0, k});
    }
    return s;
}

GadgetSpec spec_self_loop(const std::string &ref, int arity, int i, int j) {
    GadgetSpec s;
    s.vertices.push_back(ref);
    s.edges.push_back({{0, i}, {0, j}});
    for (int k = 0; k < arity; k++) {
        if (k != i && k != j) {
            s.dangling.push_back({0, k});
        }
    }
    return s;
}

// Three copies of f; slot d of each copy dangles, slot a of copy k meets
// slot b of copy k+1. With a helper, slot `hs` of every copy is first routed
// through the binary helper (entering at `ho`).
GadgetSpec spec_triangle(const std::string &ref, int d, const std::string &helper = {}, int hs = -1, int ho = 0) {
    GadgetSpec s;
    std::array<int, 2> others{};
    int n = 0;
    for (int k = 0; k < 3; k++) {
        if (k != d) {
            others[static_cast<size_t>(n++)] = k;
        }
    }
    std::array<std::array<Endpoint, 3>, 3> port{};
    for (int c = 0; c < 3; c++) {
        int v = static_cast<int>(s.vertices.size());
        s.vertices.push_back(ref);
        for (int k = 0; k < 3; k++) {
            port[static_cast<size_t>(c)][static_cast<size_t>(k)] = {v, k};
        }
        if (!helper.empty()) {
            int h = static_cast<int>(s.vertices.size());
            s.vertices.push_back(helper);
            s.edges.push_back({{v, hs}, {h, ho}});
            port[static_cast<size_t>(c)][static_cast<size_t>(hs)] = {h, 1 - ho};
        }
    }
    for (int c = 0; c < 3; c++) {
        s.edges.push_back({port[static_cast<size_t>(c)][static_cast<size_t>(others[0])],
                           port[static_cast<size_t>((c + 1) % 3)][static_cast<size_t>(others[1])]});
    }
    for (int c = 0; c < 3; c++) {
        s.dangling.push_back(port[static_cast<size_t>(c)][static_cast<size_t>(d)]);
    }
    return s;
}

std::vector<std::pair<int, int>> pins_where_equal(const std::vector<int> &slots, const std::string &x,
                                                  const std::string &y, std::vector<int> &differ) {
    std::vector<std::pair<int, int>> pins;
    for (size_t k = 0; k < slots.size(); k++) {
        if (x[k] == y[k]) {
            pins.emplace_back(slots[k], x[k] - '0');
        } else {
            differ.push_back(slots[k]);
        }
    }
    return pins;
}

class Classifier {
   public:
    explicit Classifier(Builder &b) : b_(b) {
    }

    Verdict from_set_member() {
        // A genuinely entangled factor of arity >= 3 exists once <T> fails.
        for (size_t k = 0; k < b_.set().size(); k++) {
            for (const auto &fac : tensor_factorize(b_.set()[k])) {
                if (fac.sig.arity() >= 3) {
                    return entangled(realize_factor(static_cast<int>(k), fac));
                }
            }
        }
        case_gap("no factor of arity >= 3 although the set is outside <T>");
    }

    Verdict entangled(const std::string &ref) {
        return b_.get(ref).arity() == 3 ? ternary(ref) : higher(ref);
    }

    Verdict ternary(const std::string &ref) {
        const Signature &f = b_.get(ref);
        TernaryTag tag = ternary_class(f).tag;
        if (tag == TernaryTag::NotGenuine) {
            case_gap("ternary signature " + f.str() + " is not genuinely entangled");
        }
        if (in_class_M(f, mats::K())) {
            return km(ref, mats::K());
        }
        if (in_class_M(f, mats::KX())) {
            return km(ref, mats::KX());
        }
        std::string sym = ref;
        if (!is_symmetric(f)) {
            sym = tag == TernaryTag::GHZ ? symmetrize_ghz_ref(ref) : symmetrize_w_ref(ref, "");
        }
        return symmetric_ternary(sym);
    }

    Verdict symmetric_ternary(const std::string &ref) {
        const Signature &f = b_.get(ref);
        if (ternary_class(f).tag == TernaryTag::GHZ) {
            return ghz(ref);
        }
        if (in_class_M(f, mats::K())) {
            return km(ref, mats::K());
        }
        if (in_class_M(f, mats::KX())) {
            return km(ref, mats::KX());
        }
        return b_.terminal("w-hard", {ref});
    }

    Verdict ghz(const std::string &ref) {
        auto m = ghz_normal_form(b_.get(ref));
        if (m && !ghz_side_condition(*m)) {
            Verdict v;
            v.tag = VerdictTag::Unknown;
            v.reason = "the GHZ normal form leaves an off-diagonal binary equality without a usable unary";
            return v;
        }
        return b_.terminal("ghz-csp", {ref}, m);
    }

    std::string symmetrize_ghz_ref(const std::string &ref) {
        for (int d = 0; d < 3; d++) {
            GadgetSpec spec = spec_triangle(ref, d);
            Signature g = b_.preview(spec);
            if (is_symmetric(g) && genuinely_entangled_ternary(g)) {
                return b_.gadget(StepKind::TriangleGadget, spec, "triangle with slot " + std::to_string(d) + " dangling");
            }
        }
        throw HolantError(ErrorKind::AllDegenerate, "every triangle gadget of " + b_.get(ref).str() + " is degenerate");
    }

    std::string symmetrize_w_ref(const std::string &ref, std::string helper) {
        std::vector<std::pair<GadgetSpec, std::string>> candidates;
        for (int d = 0; d < 3; d++) {
            candidates.emplace_back(spec_triangle(ref, d), "triangle with slot " + std::to_string(d) + " dangling");
        }
        for (const auto &[spec, note] : candidates) {
            Signature g = b_.preview(spec);
            if (is_symmetric(g) && genuinely_entangled_ternary(g)) {
                return b_.gadget(StepKind::TriangleGadget, spec, note);
            }
        }
        if (helper.empty()) {
            // A binary entangled projection of f itself serves as helper.
            Projection p = find_entangling_projection(b_.get(ref), 0, 1);
            std::vector<std::pair<int, int>> pins;
            GadgetSpec spec;
            spec.vertices.push_back(ref);
            for (size_t k = 0; k < p.slots.size(); k++) {
                spec.vertices.push_back(unary_ref(p.labels[k]));
                spec.edges.push_back({{0, p.slots[k]}, {static_cast<int>(k) + 1, 0}});
            }
            spec.dangling = {{0, 0}, {0, 1}};
            helper = b_.gadget(StepKind::ApplyUnary, spec, "entangling projection used as helper");
        }
        for (int hs = 0; hs < 3; hs++) {
            for (int ho = 0; ho < 2; ho++) {
                for (int d = 0; d < 3; d++) {
                    GadgetSpec spec = spec_triangle(ref, d, helper, hs, ho);
                    Signature g = b_.preview(spec);
                    if (is_symmetric(g) && genuinely_entangled_ternary(g)) {
                        return b_.gadget(StepKind::TriangleGadget, spec,
                                         "triangle with the helper on slot " + std::to_string(hs));
                    }
                }
            }
        }
        case_gap("no symmetric entangled triangle for W-type " + b_.get(ref).str());
    }

    // Pins map to delta0/delta1; |+> and |-> have no realisation here.
    std::string unary_ref(UnaryLabel label) {
        switch (label) {
            case UnaryLabel::Zero:
                return "delta0";
            case UnaryLabel::One:
                return "delta1";
            default:
                break;
        }
        std::string &cached = label == UnaryLabel::Plus ? plus_ : minus_;
        if (cached.empty()) {
            cached = realize_pm(label == UnaryLabel::Plus);
        }
        return cached;
    }

    std::string realize_pm(bool plus) {
        case_gap(std::string("the projection asked for |") + (plus ? "+" : "-") + ">, which is not realised here");
    }

    std::string realize_factor(int k, const Factor &fac) {
        const Signature &f = b_.set()[static_cast<size_t>(k)];
        std::string ref = "F" + std::to_string(k);
        if (static_cast<int>(fac.slots.size()) == f.arity()) {
            return ref;
        }
        size_t z = f.support().front();
        std::vector<std::pair<int, int>> pins;
        for (int s = 0; s < f.arity(); s++) {
            if (std::find(fac.slots.begin(), fac.slots.end(), s) == fac.slots.end()) {
                pins.emplace_back(s, f.bit(z, s));
            }
        }
        return b_.gadget(StepKind::Factor, spec_pin(ref, f.arity(), pins, fac.slots),
                         "pin the sibling factors of " + ref + " at a support point");
    }

    // Reduces a generalised equality by self-loops and hands it on.
    Verdict generalized_equality(std::string ref) {
        while (true) {
            const Signature &g = b_.get(ref);
            int m = g.arity();
            if (m == 4) {
                return b_.terminal("generalized-eq4", {ref});
            }
            if (m == 3) {
                return ternary(ref);
            }
            if (m < 3) {
                case_gap("generalised equality of arity " + std::to_string(m));
            }
            size_t z = g.support().front();
            int p = -1, q = -1;
            for (int i = 0; i < m && p < 0; i++) {
                for (int j = i + 1; j < m; j++) {
                    if (g.bit(z, i) == g.bit(z, j)) {
                        p = i;
                        q = j;
                        break;
                    }
                }
            }
            ref = b_.gadget(StepKind::SelfLoop, spec_self_loop(ref, m, p, q), "close two agreeing inputs");
        }
    }

    // Pins on the leading anchor slots of g until a generalised equality
    // of arity >= 3 appears: both slots first, then one at a time.
    std::optional<std::string> pin_to_generalized_equality(const std::string &ref, int anchors) {
        const Signature &g = b_.get(ref);
        std::vector<std::vector<std::pair<int, int>>> options;
        if (anchors == 2) {
            for (int v = 0; v < 4; v++) {
                options.push_back({{0, v >> 1}, {1, v & 1}});
            }
        }
        for (int s = 0; s < anchors; s++) {
            for (int bit = 0; bit < 2; bit++) {
                options.push_back({{s, bit}});
            }
        }
        for (const auto &pins : options) {
            GadgetSpec spec = spec_pin(ref, g.arity(), pins);
            Signature h = b_.preview(spec);
            if (h.arity() >= 3 && is_generalized_equality(h)) {
                return b_.gadget(StepKind::Pin, spec, "pin the anchor inputs");
            }
        }
        return std::nullopt;
    }

    std::string pin_ternary(const std::string &ref, const std::vector<std::vector<std::pair<int, int>>> &options) {
        const Signature &g = b_.get(ref);
        for (const auto &pins : options) {
            GadgetSpec spec = spec_pin(ref, g.arity(), pins);
            if (genuinely_entangled_ternary(b_.preview(spec))) {
                return b_.gadget(StepKind::Pin, spec, "pin an anchor input");
            }
        }
        return {};
    }

    Verdict require_ternary(const std::string &ref) {
        if (!genuinely_entangled_ternary(b_.get(ref))) {
            case_gap("expected an entangled ternary, got " + b_.get(ref).str());
        }
        return ternary(ref);
    }

    Verdict higher(const std::string &ref) {
        const Signature &f = b_.get(ref);
        int n = f.arity();
        DistanceProfile d0 = distance_profile(f, 0);
        std::vector<int> differ;
        auto pins = pins_where_equal(d0.slots, d0.x, d0.y, differ);
        std::string note = "D0 = " + std::to_string(d0.value);
        if (d0.value >= 3) {
            return generalized_equality(b_.gadget(StepKind::Pin, spec_pin(ref, n, pins), note));
        }
        std::string anchor = b_.gadget(StepKind::Pin, spec_pin(ref, n, pins), note + ", anchor");
        if (d0.value == 2) {
            DistanceProfile d1 = distance_profile(f, 1, b_.get(anchor), differ);
            std::vector<int> diff1;
            auto pins1 = pins_where_equal(d1.slots, d1.x, d1.y, diff1);
            std::vector<int> order = differ;
            order.insert(order.end(), diff1.begin(), diff1.end());
            std::string g = b_.gadget(StepKind::Pin, spec_pin(ref, n, pins1, order), "D1 = " + std::to_string(d1.value));
            if (d1.value >= 3) {
                if (auto h = pin_to_generalized_equality(g, 2)) {
                    return generalized_equality(*h);
                }
                case_gap("D1 >= 3 without a generalised equality");
            }
            if (d1.value == 2) {
                std::string t = pin_ternary(g, {{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}});
                if (!t.empty()) {
                    return ternary(t);
                }
                return block_form(g);
            }
            return require_ternary(g);
        }
        // D0 = 1: the anchor is a unary on the single differing slot.
        DistanceProfile d2 = distance_profile(f, 2, b_.get(anchor), differ);
        std::vector<int> diff2;
        auto pins2 = pins_where_equal(d2.slots, d2.x, d2.y, diff2);
        if (d2.value >= 2) {
            std::vector<int> order = differ;
            order.insert(order.end(), diff2.begin(), diff2.end());
            std::string g = b_.gadget(StepKind::Pin, spec_pin(ref, n, pins2, order), "D2 = " + std::to_string(d2.value));
            if (d2.value == 2) {
                return require_ternary(g);
            }
            if (auto h = pin_to_generalized_equality(g, 1)) {
                return generalized_equality(*h);
            }
            case_gap("D2 >= 3 without a generalised equality");
        }
        std::vector<int> pair{differ[0], diff2[0]};
        std::sort(pair.begin(), pair.end());
        std::string binary = b_.gadget(StepKind::Pin, spec_pin(ref, n, pins2, pair), "D2 = 1, binary anchor");
        DistanceProfile d3 = distance_profile(f, 3, b_.get(binary), pair);
        std::vector<int> diff3;
        auto pins3 = pins_where_equal(d3.slots, d3.x, d3.y, diff3);
        std::vector<int> order = pair;
        order.insert(order.end(), diff3.begin(), diff3.end());
        std::string g = b_.gadget(StepKind::Pin, spec_pin(ref, n, pins3, order), "D3 = " + std::to_string(d3.value));
        if (d3.value >= 3) {
            if (auto h = pin_to_generalized_equality(g, 2)) {
                return generalized_equality(*h);
            }
            case_gap("D3 >= 3 without a generalised equality");
        }
        if (d3.value == 2) {
            for (int slot : {3, 2}) {
                GadgetSpec spec;
                spec.vertices = {g, anchor};
                spec.edges.push_back({{0, slot}, {1, 0}});
                for (int k = 0; k < 4; k++) {
                    if (k != slot) {
                        spec.dangling.push_back({0, k});
                    }
                }
                if (genuinely_entangled_ternary(b_.preview(spec))) {
                    return ternary(b_.gadget(StepKind::ApplyUnary, spec, "attach the unary anchor"));
                }
            }
            case_gap("D3 = 2 without an entangled ternary");
        }
        return require_ternary(g);
    }

    // 4-ary g on (anchor pair, differing pair) with the anchor's support
    // {u, u-bar} and the other pair's {v, v-bar}.
    Verdict block_form(const std::string &ref) {
        const Signature &g = b_.get(ref);
        auto support = g.support();
        size_t uv = support.front();
        // Flipping by the first support string sends it to 0000 and the rest to
        // 0011, 1100 and 1111.
        int mask = static_cast<int>(uv);
        Signature f = normalise_block_form(g, mask);
        for (size_t x : f.support()) {
            if (x != 0 && x != 3 && x != 12 && x != 15) {
                case_gap("D1 = 2 signature outside both recognised shapes: " + g.str());
            }
        }
        return b_.terminal("interpolate-eq4", {ref}, std::nullopt, mask);
    }

    // Self-loop unary for a ternary in m o M; proportional to m^{-T}|1>.
    std::string km_unary(const std::string &ref, const Mat2 &m) {
        for (auto [i, j] : {std::pair{1, 2}, std::pair{0, 2}, std::pair{0, 1}}) {
            GadgetSpec spec = spec_self_loop(ref, 3, i, j);
            Signature u = b_.preview(spec);
            if (!u.is_zero()) {
                Signature t = holographic_transform(m.transpose(), u);
                if (!t[0].is_zero()) {
                    case_gap("self-loop unary is not a multiple of the transformed |1>");
                }
                return b_.gadget(StepKind::SelfLoop, spec, "self-loop unary");
            }
        }
        case_gap("all three self-loops of " + b_.get(ref).str() + " vanish");
    }

    // A genuinely entangled factor of some set member outside m o M.
    std::string outside_factor(const Mat2 &m) {
        for (size_t k = 0; k < b_.set().size(); k++) {
            for (const auto &fac : tensor_factorize(b_.set()[k])) {
                if (fac.sig.arity() >= 2 && !in_class_M(fac.sig, m)) {
                    return realize_factor(static_cast<int>(k), fac);
                }
            }
        }
        case_gap("every factor lies in the transformed M class");
    }

    // Binary entangled gadget outside m o M from a higher-arity phi, by the
    // slot-by-slot choice of realised unaries.
    std::string alpha_binary(const std::string &psi, const std::string &unary, const std::string &phi, const Mat2 &m) {
        Mat2 minv = m.inverse(), mt = m.transpose();
        b_.view(psi, minv, "psi in the transformed frame");
        b_.view(phi, minv, "phi in the transformed frame");
        const Signature &f = b_.get(psi);
        // Pin the last input of psi, keeping the transformed |00> coefficient non-zero.
        std::string p;
        for (int bit = 0; bit < 2 && p.empty(); bit++) {
            GadgetSpec spec = spec_pin(psi, 3, {{2, bit}});
            if (!holographic_transform(minv, b_.preview(spec))[0].is_zero()) {
                p = b_.gadget(StepKind::Pin, spec, "pin psi so the transformed |00> term is non-zero");
            }
        }
        if (p.empty()) {
            case_gap("both pins of " + f.str() + " kill the transformed |00> term");
        }
        GadgetSpec gspec;
        gspec.vertices = {p, p};
        gspec.edges.push_back({{0, 1}, {1, 1}});
        gspec.dangling = {{0, 0}, {1, 0}};
        std::string gref = b_.gadget(StepKind::ChainGadget, gspec, "two pinned copies joined, z|00> + |01> + |10>");
        Signature gt = holographic_transform(minv, b_.get(gref));
        if (!gt[3].is_zero() || gt[1].is_zero() || gt[0].is_zero()) {
            case_gap("joined gadget is not of the form z|00> + |01> + |10> after transforming");
        }
        auto chain_spec = [&](int n, int cap) {
            GadgetSpec s;
            s.vertices.push_back(cap ? "delta1" : "delta0");
            for (int k = 0; k < n; k++) {
                s.vertices.push_back(gref);
                s.edges.push_back({{k, k == 0 ? 0 : 1}, {k + 1, 0}});
            }
            s.dangling = {{n, 1}};
            return s;
        };
        Signature phit = holographic_transform(minv, b_.get(phi));
        int arity = phit.arity();
        size_t y = 0;
        bool found = false;
        for (size_t x : phit.support()) {
            if (std::popcount(x) >= 2) {
                y = x;
                found = true;
                break;
            }
        }
        if (!found) {
            case_gap("transformed phi lies in M");
        }
        std::vector<int> ones;
        for (int s = 0; s < arity; s++) {
            if (phit.bit(y, s)) {
                ones.push_back(s);
            }
        }
        int j = ones[0], k = ones[1];
        Projection proj = find_entangling_projection(phit, j, k);
        // Working unaries (transformed frame) per slot for both conditions.
        std::map<int, Signature> ent, notm;
        for (size_t t = 0; t < proj.slots.size(); t++) {
            ent[proj.slots[t]] = unary_of(proj.labels[t]);
            notm[proj.slots[t]] = phit.bit(y, proj.slots[t]) ? sigs::delta1() : sigs::delta0();
        }
        auto contract = [&](const std::map<int, Signature> &units) {
            Signature g = phit;
            // Contract from the highest slot down so lower slot numbers stay put.
            for (auto it = units.rbegin(); it != units.rend(); ++it) {
                g = apply_unary(g, it->first, it->second);
            }
            return g;
        };
        auto good = [&]() {
            Signature e = contract(ent), mm = contract(notm);
            // Slots j < k remain in order; the |11> entry is index 3.
            return !binary_det(e).is_zero() && !mm[3].is_zero();
        };
        std::map<int, std::string> chosen;
        Signature one_t = holographic_transform(mt, b_.get(unary));
        for (size_t t = 0; t < proj.slots.size(); t++) {
            int slot = proj.slots[t];
            if (proj.labels[t] == UnaryLabel::One && phit.bit(y, slot)) {
                ent[slot] = notm[slot] = one_t;
                chosen[slot] = unary;
                continue;
            }
            bool done = false;
            for (int n = 1; n <= 16 && !done; n++) {
                for (int cap = 0; cap < 2 && !done; cap++) {
                    GadgetSpec spec = chain_spec(n, cap);
                    Signature ut = holographic_transform(mt, b_.preview(spec));
                    if (ut[0].is_zero() || ut[1].is_zero()) {
                        continue;
                    }
                    Signature keep_e = ent[slot], keep_m = notm[slot];
                    ent[slot] = notm[slot] = ut;
                    if (good()) {
                        chosen[slot] = b_.gadget(StepKind::ChainGadget, spec,
                                                 "chain of " + std::to_string(n) + " joined gadgets for slot " +
                                                     std::to_string(slot));
                        done = true;
                    } else {
                        ent[slot] = keep_e;
                        notm[slot] = keep_m;
                    }
                }
            }
            if (!done) {
                case_gap("no realised unary keeps both conditions non-zero on slot " + std::to_string(slot));
            }
        }
        GadgetSpec fin;
        fin.vertices.push_back(phi);
        for (const auto &[slot, uref] : chosen) {
            int v = static_cast<int>(fin.vertices.size());
            fin.vertices.push_back(uref);
            fin.edges.push_back({{0, slot}, {v, 0}});
        }
        fin.dangling = {{0, j}, {0, k}};
        std::string out = b_.gadget(StepKind::ApplyUnary, fin, "binary entangled gadget outside the class");
        const Signature &bsig = b_.get(out);
        if (binary_det(bsig).is_zero() || in_class_M(bsig, m)) {
            case_gap("the alpha construction did not leave the class");
        }
        return out;
    }

    std::string binary_outside(const std::string &psi, const Mat2 &m) {
        std::string phi = outside_factor(m);
        if (b_.get(phi).arity() == 2) {
            return phi;
        }
        std::string unary = km_unary(psi, m);
        return alpha_binary(psi, unary, phi, m);
    }

    Verdict km(const std::string &psi, const Mat2 &m) {
        std::string phi = binary_outside(psi, m);
        std::string sym = psi;
        if (!is_symmetric(b_.get(psi))) {
            sym = symmetrize_w_ref(psi, phi);
        }
        const Signature &s = b_.get(sym);
        if (ternary_class(s).tag == TernaryTag::GHZ) {
            return ghz(sym);
        }
        std::optional<Mat2> cls;
        if (in_class_M(s, mats::K())) {
            cls = mats::K();
        } else if (in_class_M(s, mats::KX())) {
            cls = mats::KX();
        }
        if (!cls) {
            return b_.terminal("w-hard", {sym});
        }
        if (*cls != m) {
            phi = binary_outside(sym, *cls);
        }
        return b_.terminal("w-binary", {sym, symmetric_binary(sym, phi, *cls)}, *cls);
    }

    std::string symmetric_binary(const std::string &sym, const std::string &phi, const Mat2 &m) {
        std::vector<std::pair<GadgetSpec, std::string>> candidates;
        for (int side = 0; side < 2; side++) {
            GadgetSpec s;
            s.vertices = {phi, phi};
            s.edges.push_back({{0, 1 - side}, {1, 1 - side}});
            s.dangling = {{0, side}, {1, side}};
            candidates.emplace_back(s, "two copies of phi joined");
        }
        for (const char *pin : {"delta0", "delta1"}) {
            for (int side = 0; side < 2; side++) {
                GadgetSpec s;
                s.vertices = {phi, sym, pin, phi};
                s.edges.push_back({{0, 1 - side}, {1, 0}});
                s.edges.push_back({{1, 1}, {3, 1 - side}});
                s.edges.push_back({{1, 2}, {2, 0}});
                s.dangling = {{0, side}, {3, side}};
                candidates.emplace_back(s, std::string("phi, pinned ternary, phi with ") + pin);
            }
        }
        for (const auto &[spec, note] : candidates) {
            Signature g = b_.preview(spec);
            if (is_symmetric(g) && !binary_det(g).is_zero() && !in_class_M(g, m)) {
                return b_.gadget(StepKind::ChainGadget, spec, note);
            }
        }
        case_gap("no symmetric binary outside the class");
    }

   private:
    Builder &b_;
    std::string plus_, minus_;
};

std::optional<size_t> index_in(std::span<const Signature> set, const Signature &f) {
    for (size_t k = 0; k < set.size(); k++) {
        if (set[k] == f) {
            return k;
        }
    }
    return std::nullopt;
}

void require_valid_set(std::span<const Signature> set) {
    if (set.empty()) {
        throw HolantError(ErrorKind::PreconditionViolated, "the signature set is empty");
    }
    for (size_t k = 0; k < set.size(); k++) {
        if (set[k].is_zero()) {
            throw HolantError(ErrorKind::ZeroSignature, "signature " + std::to_string(k) + " is zero");
        }
    }
}

template <typename Fn>
Verdict with_screen(std::span<const Signature> set, Fn hard) {
    FamilyVerdict screen = tractability_screen(set);
    Verdict v;
    if (screen.member == Membership::Member) {
        v.tag = VerdictTag::Tractable;
        v.family = screen;
        v.reason = "in " + screen.family;
        return v;
    }
    if (screen.member == Membership::Unknown) {
        v.tag = VerdictTag::Unknown;
        v.reason = screen.reason;
        return v;
    }
    return hard();
}

}  // namespace

Verdict classify_holant_c(std::span<const Signature> set, const ClassifyOptions &options) {
    require_valid_set(set);
    FamilyVerdict screen = tractability_screen(set, options);
    Verdict v;
    if (screen.member == Membership::Member) {
        v.tag = VerdictTag::Tractable;
        v.family = screen;
        v.reason = "in " + screen.family;
        return v;
    }
    if (screen.member == Membership::Unknown) {
        v.tag = VerdictTag::Unknown;
        v.reason = screen.reason;
        return v;
    }
    Builder b(set);
    Classifier c(b);
    try {
        return c.from_set_member();
    } catch (const HolantError &e) {
        if (e.kind() == ErrorKind::ProfileUndefined || e.kind() == ErrorKind::ExhaustionFailure ||
            e.kind() == ErrorKind::AllDegenerate) {
            throw HolantError(ErrorKind::InternalCaseGap, e.what());
        }
        throw;
    }
}

Verdict ternary_hardness(const Signature &f, std::span<const Signature> set) {
    require_valid_set(set);
    auto k = index_in(set, f);
    if (!k || !genuinely_entangled_ternary(f)) {
        throw HolantError(ErrorKind::PreconditionViolated, "f must be an entangled ternary member of the set");
    }
    return with_screen(set, [&] {
        Builder b(set);
        return Classifier(b).ternary("F" + std::to_string(*k));
    });
}

Verdict case_km_pipeline(const Signature &f, std::span<const Signature> set) {
    require_valid_set(set);
    auto k = index_in(set, f);
    if (!k || !genuinely_entangled_ternary(f)) {
        throw HolantError(ErrorKind::PreconditionViolated, "f must be an entangled ternary member of the set");
    }
    std::optional<Mat2> m;
    if (in_class_M(f, mats::K())) {
        m = mats::K();
    } else if (in_class_M(f, mats::KX())) {
        m = mats::KX();
    } else {
        throw HolantError(ErrorKind::PreconditionViolated, "f is in neither K o M nor KX o M");
    }
    if (in_transformed_closure(set, *m, BaseFamily::M).is_member()) {
        throw HolantError(ErrorKind::PreconditionViolated, "the whole set lies in the same class");
    }
    return with_screen(set, [&] {
        Builder b(set);
        return Classifier(b).km("F" + std::to_string(*k), *m);
    });
}

Signature km_self_loop_unary(const Signature &f) {
    std::optional<Mat2> m;
    if (f.arity() == 3 && in_class_M(f, mats::K())) {
        m = mats::K();
    } else if (f.arity() == 3 && in_class_M(f, mats::KX())) {
        m = mats::KX();
    } else {
        throw HolantError(ErrorKind::PreconditionViolated, "f is not a ternary in K o M or KX o M");
    }
    std::vector<Signature> set{f};
    Builder b(set);
    return b.get(Classifier(b).km_unary("F0", *m));
}

Signature symmetrize_ghz(const Signature &f) {
    if (f.arity() != 3 || ternary_class(f).tag != TernaryTag::GHZ) {
        throw HolantError(ErrorKind::PreconditionViolated, "symmetrize_ghz needs a GHZ-type ternary");
    }
    std::vector<Signature> set{f};
    Builder b(set);
    return b.get(Classifier(b).symmetrize_ghz_ref("F0"));
}

Signature symmetrize_w(const Signature &f, const std::optional<Signature> &helper) {
    if (f.arity() != 3 || ternary_class(f).tag != TernaryTag::W) {
        throw HolantError(ErrorKind::PreconditionViolated, "symmetrize_w needs a W-type ternary");
    }
    std::vector<Signature> set{f};
    if (helper) {
        if (helper->arity() != 2 || binary_det(*helper).is_zero()) {
            throw HolantError(ErrorKind::PreconditionViolated, "the helper must be an entangled binary");
        }
        set.push_back(*helper);
    }
    Builder b(set);
    Classifier c(b);
    if (!helper && (in_class_M(f, mats::K()) || in_class_M(f, mats::KX()))) {
        throw HolantError(ErrorKind::PreconditionViolated, "f lies in K o M or KX o M and needs a helper");
    }
    return b.get(c.symmetrize_w_ref("F0", helper ? "F1" : ""));
}

namespace {

// Solves a square system by Gaussian elimination; nullopt if singular.
std::optional<std::vector<Scalar>> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) {
            piv++;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; r++) {
            if (r == col || a[r][col].is_zero()) {
                continue;
            }
            Scalar factor = a[r][col] / a[col][col];
            for (size_t c = col; c < n; c++) {
                a[r][c] -= factor * a[col][c];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<Scalar> x(n);
    for (size_t r = 0; r < n; r++) {
        x[r] = rhs[r] / a[r][r];
    }
    return x;
}

size_t rank_of(std::vector<std::vector<Scalar>> a) {
    size_t rank = 0, cols = a.empty() ? 0 : a[0].size();
    for (size_t col = 0; col < cols && rank < a.size(); col++) {
        size_t piv = rank;
        while (piv < a.size() && a[piv][col].is_zero()) {
            piv++;
        }
        if (piv == a.size()) {
            continue;
        }
        std::swap(a[piv], a[rank]);
        for (size_t r = rank + 1; r < a.size(); r++) {
            Scalar factor = a[r][col] / a[rank][col];
            for (size_t c = col; c < cols; c++) {
                a[r][c] -= factor * a[rank][c];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

SignatureGrid interpolation_target(const Signature &f, int k, int chain) {
    SignatureGrid g;
    std::vector<int> first(static_cast<size_t>(k)), last(static_cast<size_t>(k)), b(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) {
        if (chain == 0) {
            first[static_cast<size_t>(i)] = last[static_cast<size_t>(i)] = g.add_vertex(sigs::equality(4));
        } else {
            int prev = -1;
            for (int c = 0; c < chain; c++) {
                int v = g.add_vertex(f);
                if (prev >= 0) {
                    g.connect({prev, 2}, {v, 0});
                    g.connect({prev, 3}, {v, 1});
                } else {
                    first[static_cast<size_t>(i)] = v;
                }
                prev = v;
            }
            last[static_cast<size_t>(i)] = prev;
        }
        b[static_cast<size_t>(i)] = g.add_vertex(f);
    }
    for (int i = 0; i < k; i++) {
        int e0 = first[static_cast<size_t>(i)], e1 = last[static_cast<size_t>(i)], bi = b[static_cast<size_t>(i)];
        g.connect({e0, 0}, {bi, 2});
        g.connect({e0, 1}, {bi, 3});
        g.connect({e1, 2}, {b[static_cast<size_t>((i + 1) % k)], 0});
        int u = g.add_vertex(Signature(1, {1, 2}));
        g.connect({e1, 3}, {u, 0});
        int w = g.add_vertex(Signature(1, {1, Scalar::imag()}));
        g.connect({bi, 1}, {w, 0});
    }
    return g;
}

InterpolationDemo interpolate_eq4_reduction(const Signature &f, int occurrences) {
    if (f.arity() != 4) {
        throw HolantError(ErrorKind::WrongArity, "interpolation needs a 4-ary signature");
    }
    for (size_t x : f.support()) {
        if (x != 0 && x != 3 && x != 12 && x != 15) {
            throw HolantError(ErrorKind::WrongSupport, "support string " + f.bits(x) + " is outside {0000, 0011, 1100, 1111}");
        }
    }
    if (occurrences < 1 || occurrences > 3) {
        throw HolantError(ErrorKind::PreconditionViolated, "between 1 and 3 occurrences of =4 are supported");
    }
    Scalar a = f[0], b = f[3], c = f[12], d = f[15];
    Scalar det = a * d - b * c;
    if (det.is_zero()) {
        throw HolantError(ErrorKind::RankDeficient, "[[a, b], [c, d]] has rank below 2");
    }
    InterpolationDemo demo;
    demo.occurrences = occurrences;
    if (b.is_zero() && c.is_zero()) {
        demo.trivial = true;
        return demo;
    }
    // M^s = p_s M + q_s I, so a chain of s copies equals p_s f + q_s (=4).
    Scalar trace = a + d;
    Scalar p = 1, q = 0;
    size_t k = static_cast<size_t>(occurrences);
    std::vector<std::vector<Scalar>> rows;
    int direct = 0;
    Scalar direct_scale;
    for (int s = 1; s <= 48 && rows.size() < k + 1; s++) {
        if (s > 1) {
            Scalar np = p * trace + q, nq = -(p * det);
            p = np;
            q = nq;
        }
        if (p.is_zero() && direct == 0) {
            direct = s;
            direct_scale = q;
        }
        std::vector<Scalar> row(k + 1);
        for (size_t j = 0; j <= k; j++) {
            row[j] = p.pow(static_cast<long>(j)) * q.pow(static_cast<long>(k - j));
        }
        auto trial = rows;
        trial.push_back(row);
        if (rank_of(trial) == trial.size()) {
            rows.push_back(row);
            demo.chain_lengths.push_back(s);
        }
    }
    demo.expected = holant_contract(interpolation_target(f, occurrences, 0));
    if (rows.size() == k + 1) {
        std::vector<Scalar> values;
        for (int s : demo.chain_lengths) {
            values.push_back(holant_contract(interpolation_target(f, occurrences, s)));
        }
        if (auto sol = solve(rows, values)) {
            demo.invertible = true;
            demo.recovered = (*sol)[0];
        }
    } else if (direct > 0) {
        // M^s is a multiple of the identity: the chain itself is c (=4).
        demo.direct_chain = direct;
        demo.chain_lengths = {direct};
        demo.recovered = holant_contract(interpolation_target(f, occurrences, direct)) /
                         direct_scale.pow(static_cast<long>(k));
    }
    return demo;
}

ReductionStep generalized_eq4_reduction(const Signature &f, const std::string &ref) {
    if (f.arity() != 4) {
        throw HolantError(ErrorKind::WrongArity, "a 4-ary signature is required");
    }
    auto support = f.support();
    if (support.size() != 2) {
        throw HolantError(ErrorKind::WrongSupport, "support has " + std::to_string(support.size()) + " strings, not 2");
    }
    int dist = std::popcount(support[0] ^ support[1]);
    if (dist != 4) {
        throw HolantError(ErrorKind::WrongSupport, "support strings are at distance " + std::to_string(dist));
    }
    ReductionStep step;
    step.kind = StepKind::TheoremTerminal;
    step.theorem = "generalized-eq4";
    step.citation = terminal_citation(step.theorem);
    step.refs = {ref};
    return step;
}

VerifyResult certificate_verify(const Certificate &cert, std::span<const Signature> set) {
    std::map<std::string, Signature> env;
    std::set<std::string> views;
    for (size_t k = 0; k < set.size(); k++) {
        env["F" + std::to_string(k)] = set[k];
    }
    env["delta0"] = sigs::delta0();
    env["delta1"] = sigs::delta1();
    auto fail = [](size_t i, std::string why) { return VerifyResult{false, static_cast<int>(i), std::move(why)}; };
    for (size_t i = 0; i < cert.steps.size(); i++) {
        const ReductionStep &step = cert.steps[i];
        if (step.kind == StepKind::TheoremTerminal) {
            if (i + 1 != cert.steps.size()) {
                return fail(i, "a terminal must be the last step");
            }
            for (const auto &r : step.refs) {
                if (views.count(r)) {
                    return fail(i, "terminal refers to a transformed view '" + r + "'");
                }
            }
            if (auto failure = check_terminal(step, env, set)) {
                return fail(i, *failure);
            }
            continue;
        }
        if (i + 1 == cert.steps.size()) {
            return fail(i, "the certificate does not end in a terminal");
        }
        if (step.output.empty() || env.count(step.output)) {
            return fail(i, "output name '" + step.output + "' is empty or already used");
        }
        if (!step.claimed_output) {
            return fail(i, "missing claimed output");
        }
        if (step.scale.is_zero()) {
            return fail(i, "declared scale is zero");
        }
        Signature replayed;
        try {
            if (step.kind == StepKind::HolographicTransform) {
                if (!step.matrix || !env.count(step.input) || views.count(step.input)) {
                    return fail(i, "transform needs a matrix and a realised input");
                }
                replayed = holographic_transform(*step.matrix, env.at(step.input));
                views.insert(step.output);
            } else {
                if (!step.gadget) {
                    return fail(i, "missing gadget");
                }
                for (const auto &name : step.gadget->vertices) {
                    if (views.count(name)) {
                        return fail(i, "gadget uses the transformed view '" + name + "'");
                    }
                }
                replayed = replay(*step.gadget, env);
            }
        } catch (const HolantError &e) {
            return fail(i, e.what());
        }
        if (replayed != step.claimed_output->scaled(step.scale)) {
            return fail(i, "replayed signature " + replayed.str() + " differs from the claim");
        }
        env[step.output] = *step.claimed_output;
    }
    return {};
}

}  // namespace holant
