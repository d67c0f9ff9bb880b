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

#include <iostream>

#include "CLI11.hpp"
#include "holant/dichotomy.h"
#include "holant/entanglement.h"
#include "holant/error.h"
#include "holant/io.h"
#include "holant/tractable_eval.h"
#include "json.hpp"

using namespace holant;
using nlohmann::json;

namespace {

constexpr int kExitParse = 64;
constexpr int kExitSemantic = 65;

struct Options {
    std::string file, second, method = "auto", family, certificate_out, candidates, matrix, side = "L", out;
    bool json = false;
};

std::vector<Signature> read_set(const std::string &path) {
    return parse_set_json(read_text_file(path));
}

std::string split_str(const std::vector<Factor> &factors) {
    std::string s = "PRODUCT(";
    for (size_t k = 0; k < factors.size(); k++) {
        s += k ? ",{" : "{";
        for (size_t j = 0; j < factors[k].slots.size(); j++) {
            s += (j ? "," : "") + std::to_string(factors[k].slots[j]);
        }
        s += "}";
    }
    return s + ")";
}

json factors_json(const std::vector<Factor> &factors) {
    json list = json::array();
    for (const auto &f : factors) {
        list.push_back({{"slots", f.slots}, {"signature", json::parse(signature_to_json(f.sig))}});
    }
    return list;
}

void emit(const Options &o, const json &j, const std::string &text) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int cmd_eval(const Options &o) {
    SignatureGrid g = parse_grid_json(read_text_file(o.file));
    Scalar value;
    std::string method = o.method;
    if (method == "brute") {
        value = holant_bruteforce(g);
    } else if (method == "contract") {
        value = holant_contract(g);
    } else {
        try {
            FamilyEvaluation fe = eval_by_family(g);
            value = fe.value;
            method = "family:" + fe.algorithm;
        } catch (const HolantError &e) {
            if (o.method == "family" || e.kind() != ErrorKind::NotInFamily) {
                throw;
            }
            value = holant_contract(g);
            method = "contract";
        }
    }
    emit(o, {{"value", value.str()}, {"method", method}},
         o.method == "family" ? value.str() + "  (" + method + ")" : value.str());
    return 0;
}

ClassifyOptions classify_options(const Options &o) {
    ClassifyOptions opts;
    if (!o.candidates.empty()) {
        opts.cs_candidates = parse_candidates_json(read_text_file(o.candidates));
    }
    return opts;
}

json family_json(const FamilyVerdict &v) {
    json j{{"member", membership_name(v.member)}, {"family", v.family}};
    if (v.transform) {
        j["transform"] = v.transform->str();
    }
    if (!v.witness.empty()) {
        j["witness"] = v.witness;
    }
    if (!v.reason.empty()) {
        j["reason"] = v.reason;
    }
    return j;
}

int cmd_classify(const Options &o) {
    auto set = read_set(o.file);
    Verdict v = classify_holant_c(set, classify_options(o));
    std::string text = verdict_tag_name(v.tag);
    json j{{"verdict", text}, {"reason", v.reason}};
    if (v.tag == VerdictTag::Tractable) {
        text += " " + v.family.family;
        if (v.family.transform) {
            text += " " + v.family.transform->str();
        }
        j["family"] = family_json(v.family);
    } else if (v.tag == VerdictTag::Hard) {
        const auto &last = v.certificate.steps.back();
        text += " via " + last.theorem + " (" + std::to_string(v.certificate.steps.size()) + " steps)";
        j["terminal"] = last.theorem;
        j["steps"] = v.certificate.steps.size();
    } else {
        text += ": " + v.reason;
    }
    if (!o.certificate_out.empty()) {
        write_text_file(o.certificate_out, certificate_to_json(v.certificate));
    }
    emit(o, j, text);
    switch (v.tag) {
        case VerdictTag::Tractable:
            return 0;
        case VerdictTag::Hard:
            return 1;
        case VerdictTag::Unknown:
            return 2;
    }
    return 2;
}

int cmd_classify_family(const Options &o) {
    auto set = read_set(o.file);
    FamilyVerdict v;
    const std::string &f = o.family;
    if (f == "T") {
        v = in_T_closure(set);
    } else if (f == "OE") {
        v = exists_orthogonal_O(set);
    } else if (f == "KE") {
        v = in_transformed_closure(set, mats::K(), BaseFamily::E);
    } else if (f == "KM") {
        v = in_transformed_closure(set, mats::K(), BaseFamily::M);
    } else if (f == "KXM") {
        v = in_transformed_closure(set, mats::KX(), BaseFamily::M);
    } else if (f == "A") {
        v = in_A(set);
    } else if (f == "L") {
        v = in_L_set(set);
    } else if (f == "SA") {
        if (o.candidates.empty()) {
            v = exists_S_in_cS(set);
        } else {
            auto cands = parse_candidates_json(read_text_file(o.candidates));
            v = exists_S_in_cS(set, cands, false);
        }
    } else {
        v = holant_star_tractable(set);
    }
    std::string text = membership_name(v.member);
    if (v.member == Membership::Member) {
        if (v.transform) {
            text += " transform " + v.transform->str();
        }
        if (!v.witness.empty()) {
            text += " (" + v.witness + ")";
        }
    } else if (!v.reason.empty()) {
        text += ": " + v.reason;
    }
    emit(o, family_json(v), text);
    return 0;
}

int cmd_entclass(const Options &o) {
    Signature f = parse_signature_json(read_text_file(o.file));
    if (f.is_zero()) {
        throw HolantError(ErrorKind::ZeroSignature, "the signature is zero");
    }
    auto factors = tensor_factorize(f);
    std::string label;
    if (factors.size() > 1) {
        label = split_str(factors);
    } else if (f.arity() == 3) {
        label = ternary_tag_name(ternary_class(f).tag);
    } else {
        label = "ENTANGLED";
    }
    json j{{"class", factors.size() > 1 ? "PRODUCT" : label}};
    if (factors.size() > 1) {
        j["split"] = factors_json(factors);
    }
    emit(o, j, label);
    return 0;
}

int cmd_factor(const Options &o) {
    Signature f = parse_signature_json(read_text_file(o.file));
    auto factors = tensor_factorize(f);
    std::string text;
    for (const auto &fac : factors) {
        std::string slots;
        for (int s : fac.slots) {
            slots += (slots.empty() ? "" : ",") + std::to_string(s);
        }
        text += (text.empty() ? "" : "\n") + std::string("{") + slots + "}: " + fac.sig.str();
    }
    emit(o, factors_json(factors), text);
    return 0;
}

int cmd_transform(const Options &o) {
    SignatureGrid g = parse_grid_json(read_text_file(o.file));
    if (!g.has_sides()) {
        g = make_bipartite(g);
    }
    Mat2 m = parse_mat2(o.matrix);
    // The matrix acts on the chosen side; the other side gets its inverse transpose.
    SignatureGrid t = transform_bipartite(g, o.side == "L" ? m : m.transpose().inverse());
    std::string text = grid_to_json(t);
    if (!o.out.empty()) {
        write_text_file(o.out, text);
        emit(o, {{"written", o.out}}, "wrote " + o.out);
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int cmd_gadget(const Options &o) {
    SignatureGrid g = parse_grid_json(read_text_file(o.file));
    Signature f = gadget_signature(g);
    emit(o, json::parse(signature_to_json(f)), f.str());
    return 0;
}

int cmd_verify(const Options &o) {
    Certificate cert = parse_certificate_json(read_text_file(o.file));
    auto set = read_set(o.second);
    VerifyResult r = certificate_verify(cert, set);
    json j{{"ok", r.ok}};
    if (!r.ok) {
        j["failing_step"] = r.failing_step;
        j["reason"] = r.reason;
    }
    emit(o, j, r.ok ? "PASS" : "FAIL at step " + std::to_string(r.failing_step) + ": " + r.reason);
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Boolean Holant workbench"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto *eval = app.add_subcommand("eval", "Evaluate a signature grid");
    eval->add_option("grid", o.file)->required();
    eval->add_option("--method", o.method)->check(CLI::IsMember({"brute", "contract", "family", "auto"}));

    auto *classify = app.add_subcommand("classify", "Classify Holant^c of a signature set");
    classify->add_option("set", o.file)->required();
    classify->add_option("--certificate", o.certificate_out, "Write the certificate here");
    classify->add_option("--candidates", o.candidates, "Replace the S candidate list");

    auto *family = app.add_subcommand("classify-family", "Test membership in one tractable family");
    family->add_option("set", o.file)->required();
    family->add_option("--family", o.family)
        ->required()
        ->check(CLI::IsMember({"T", "OE", "KE", "KM", "KXM", "A", "L", "SA", "holant-star"}));
    family->add_option("--candidates", o.candidates, "Replace the S candidate list");

    auto *entclass = app.add_subcommand("entclass", "Entanglement class of a signature");
    entclass->add_option("signature", o.file)->required();

    auto *factor = app.add_subcommand("factor", "Tensor factorization of a signature");
    factor->add_option("signature", o.file)->required();

    auto *transform = app.add_subcommand("transform", "Holographic transformation of a grid");
    transform->add_option("grid", o.file)->required();
    transform->add_option("--matrix", o.matrix)->required();
    transform->add_option("--side", o.side)->check(CLI::IsMember({"L", "R"}));
    transform->add_option("--out", o.out);

    auto *gadget = app.add_subcommand("gadget", "Signature of a grid with dangling edges");
    gadget->add_option("grid", o.file)->required();

    auto *verify = app.add_subcommand("verify-cert", "Replay and check a certificate");
    verify->add_option("certificate", o.file)->required();
    verify->add_option("set", o.second)->required();

    for (auto *sub : app.get_subcommands({})) {
        sub->add_flag("--json", o.json, "Machine-readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*eval) {
            return cmd_eval(o);
        }
        if (*classify) {
            return cmd_classify(o);
        }
        if (*family) {
            return cmd_classify_family(o);
        }
        if (*entclass) {
            return cmd_entclass(o);
        }
        if (*factor) {
            return cmd_factor(o);
        }
        if (*transform) {
            return cmd_transform(o);
        }
        if (*gadget) {
            return cmd_gadget(o);
        }
        return cmd_verify(o);
    } catch (const HolantError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? kExitParse : kExitSemantic;
    }
}
