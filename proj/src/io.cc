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

#include "holant/io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "holant/error.h"
#include "json.hpp"

namespace holant {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string &what) {
    throw HolantError(ErrorKind::Parse, what);
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

const json &field(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

Scalar scalar_from(const json &j) {
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Scalar(j.get<long>());
    }
    parse_fail("expected a scalar literal, got " + j.dump());
}

int int_from(const json &j, const char *what) {
    if (!j.is_number_integer()) {
        parse_fail(std::string("expected an integer ") + what + ", got " + j.dump());
    }
    return j.get<int>();
}

std::vector<Scalar> scalars_from(const json &j) {
    if (!j.is_array()) {
        parse_fail("expected an array of scalars, got " + j.dump());
    }
    std::vector<Scalar> out;
    for (const auto &x : j) {
        out.push_back(scalar_from(x));
    }
    return out;
}

Signature signature_from(const json &j) {
    if (!j.is_object()) {
        parse_fail("a signature must be an object, got " + j.dump());
    }
    if (j.contains("symmetric")) {
        auto w = scalars_from(j.at("symmetric"));
        if (w.empty()) {
            parse_fail("empty symmetric shorthand");
        }
        return Signature::from_symmetric(w);
    }
    int arity = int_from(field(j, "arity"), "arity");
    auto values = scalars_from(field(j, "values"));
    if (arity < 0 || arity > kMaxArity || values.size() != (size_t{1} << arity)) {
        parse_fail("arity " + std::to_string(arity) + " does not match " + std::to_string(values.size()) + " values");
    }
    return Signature(arity, std::move(values));
}

json signature_json(const Signature &f) {
    json values = json::array();
    for (const auto &x : f.values()) {
        values.push_back(x.str());
    }
    return {{"arity", f.arity()}, {"values", values}};
}

Endpoint endpoint_from(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        parse_fail("an endpoint is [vertex, slot], got " + j.dump());
    }
    return {int_from(j[0], "vertex"), int_from(j[1], "slot")};
}

json endpoint_json(const Endpoint &e) {
    return json::array({e.vertex, e.slot});
}

Mat2 mat2_from(const json &j) {
    if (j.is_string()) {
        return parse_mat2(j.get<std::string>());
    }
    if (j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
        j[1].size() == 2) {
        return Mat2{scalar_from(j[0][0]), scalar_from(j[0][1]), scalar_from(j[1][0]), scalar_from(j[1][1])};
    }
    parse_fail("expected a matrix, got " + j.dump());
}

json mat2_json(const Mat2 &m) {
    return json::array({json::array({m.a.str(), m.b.str()}), json::array({m.c.str(), m.d.str()})});
}

// Splits at top-level commas, ignoring those nested in brackets or parentheses.
std::vector<std::string> split_top_level(std::string_view text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '[' || ch == '(') {
            depth++;
        } else if (ch == ']' || ch == ')') {
            depth--;
        }
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Type mismatches inside the JSON library surface as Parse errors too.
template <typename Fn>
auto guarded(Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception &e) {
        parse_fail(std::string("malformed JSON structure: ") + e.what());
    }
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\n\r");
    size_t e = s.find_last_not_of(" \t\n\r");
    return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

std::string unbracket(const std::string &s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
        parse_fail("expected a bracketed list, got '" + t + "'");
    }
    return t.substr(1, t.size() - 2);
}

}  // namespace

Signature parse_signature_json(std::string_view text) {
    return guarded([&] {
        return signature_from(parse_text(text));
    });
}

std::string signature_to_json(const Signature &f) {
    return signature_json(f).dump();
}

std::vector<Signature> parse_set_json(std::string_view text) {
    return guarded([&] {
        json j = parse_text(text);
        const json &list = j.is_array() ? j : field(j, "signatures");
        if (!list.is_array()) {
            parse_fail("'signatures' must be an array");
        }
        std::vector<Signature> out;
        for (const auto &s : list) {
            out.push_back(signature_from(s));
        }
        return out;
    });
}

std::string set_to_json(std::span<const Signature> set) {
    json list = json::array();
    for (const auto &f : set) {
        list.push_back(signature_json(f));
    }
    return json{{"signatures", list}}.dump(2);
}

SignatureGrid parse_grid_json(std::string_view text) {
    return guarded([&] {
        json j = parse_text(text);
        std::map<std::string, Signature> named;
        const json &sigs_obj = field(j, "signatures");
        if (!sigs_obj.is_object()) {
            parse_fail("'signatures' must map names to signatures");
        }
        for (const auto &[name, s] : sigs_obj.items()) {
            named.emplace(name, signature_from(s));
        }
        const json &verts = field(j, "vertices");
        const json *sides = j.contains("side") ? &j.at("side") : nullptr;
        if (sides && (!sides->is_array() || sides->size() != verts.size())) {
            parse_fail("'side' needs one entry per vertex");
        }
        SignatureGrid g;
        for (size_t v = 0; v < verts.size(); v++) {
            const json &sig = field(verts[v], "sig");
            if (!sig.is_string() || !named.count(sig.get<std::string>())) {
                parse_fail("vertex " + std::to_string(v) + " refers to an unknown signature");
            }
            Side side = Side::None;
            if (sides) {
                std::string s = (*sides)[v].is_string() ? (*sides)[v].get<std::string>() : "";
                if (s == "L") {
                    side = Side::L;
                } else if (s == "R") {
                    side = Side::R;
                } else {
                    parse_fail("side must be \"L\" or \"R\"");
                }
            }
            std::string name = sig.get<std::string>();
            g.add_vertex(named.at(name), side, name);
        }
        if (j.contains("edges")) {
            for (const auto &e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) {
                    parse_fail("an edge is [[v, slot], [v, slot]], got " + e.dump());
                }
                g.connect(endpoint_from(e[0]), endpoint_from(e[1]));
            }
        }
        if (j.contains("dangling")) {
            for (const auto &d : j.at("dangling")) {
                g.add_dangling(endpoint_from(d));
            }
        }
        return g;
    });
}

std::string grid_to_json(const SignatureGrid &g) {
    json sigs_obj = json::object(), verts = json::array(), sides = json::array();
    std::map<std::string, Signature> used;
    for (size_t v = 0; v < g.vertices().size(); v++) {
        const Vertex &vx = g.vertices()[v];
        std::string name = vx.name.empty() ? "v" + std::to_string(v) : vx.name;
        // Two vertices may share a name only if they carry the same signature.
        if (auto it = used.find(name); it != used.end() && it->second != vx.sig) {
            name += "_" + std::to_string(v);
        }
        used.emplace(name, vx.sig);
        sigs_obj[name] = signature_json(vx.sig);
        verts.push_back({{"sig", name}});
        sides.push_back(vx.side == Side::L ? "L" : "R");
    }
    json edges = json::array(), dangling = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back(json::array({endpoint_json(e.a), endpoint_json(e.b)}));
    }
    for (const auto &d : g.dangling()) {
        dangling.push_back(endpoint_json(d));
    }
    json out{{"signatures", sigs_obj}, {"vertices", verts}, {"edges", edges}, {"dangling", dangling}};
    if (g.has_sides()) {
        out["side"] = sides;
    }
    return out.dump(2);
}

Mat2 parse_mat2(std::string_view text) {
    static const std::map<std::string, Mat2 (*)()> names{
        {"I", &Mat2::identity}, {"T", &mats::T}, {"X", &mats::X}, {"K", &mats::K},
        {"KX", &mats::KX},      {"Z", &mats::Z}, {"H", &mats::H}, {"S", &mats::S},
    };
    std::string t = trim(text);
    if (auto it = names.find(t); it != names.end()) {
        return it->second();
    }
    auto rows = split_top_level(unbracket(t));
    if (rows.size() != 2) {
        parse_fail("a matrix has two rows: '" + t + "'");
    }
    std::vector<Scalar> entries;
    for (const auto &row : rows) {
        auto cols = split_top_level(unbracket(row));
        if (cols.size() != 2) {
            parse_fail("a matrix row has two entries: '" + row + "'");
        }
        for (const auto &c : cols) {
            std::string s = trim(c);
            // Entries may be quoted when the literal comes from JSON.
            if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
                s = s.substr(1, s.size() - 2);
            }
            entries.push_back(Scalar::parse(s));
        }
    }
    return Mat2{entries[0], entries[1], entries[2], entries[3]};
}

std::vector<Mat2> parse_candidates_json(std::string_view text) {
    return guarded([&] {
        json j = parse_text(text);
        const json &list = j.is_array() ? j : field(j, "candidates");
        if (!list.is_array()) {
            parse_fail("'candidates' must be an array");
        }
        std::vector<Mat2> out;
        for (const auto &m : list) {
            out.push_back(mat2_from(m));
        }
        return out;
    });
}

Certificate parse_certificate_json(std::string_view text) {
    return guarded([&] {
        json j = parse_text(text);
        const json &list = j.is_array() ? j : field(j, "steps");
        if (!list.is_array()) {
            parse_fail("certificate steps must be an array");
        }
        Certificate cert;
        for (const auto &s : list) {
            ReductionStep step;
            step.kind = parse_step_kind(field(s, "kind").get<std::string>());
            auto str = [&](const char *key) {
                return s.contains(key) && s.at(key).is_string() ? s.at(key).get<std::string>() : std::string();
            };
            step.output = str("output");
            step.input = str("input");
            step.theorem = str("theorem");
            step.citation = str("citation");
            step.note = str("note");
            if (s.contains("gadget")) {
                const json &gj = s.at("gadget");
                GadgetSpec spec;
                for (const auto &v : field(gj, "vertices")) {
                    spec.vertices.push_back(v.get<std::string>());
                }
                for (const auto &e : field(gj, "edges")) {
                    if (!e.is_array() || e.size() != 2) {
                        parse_fail("a gadget edge is [[v, slot], [v, slot]]");
                    }
                    spec.edges.push_back({endpoint_from(e[0]), endpoint_from(e[1])});
                }
                for (const auto &d : field(gj, "dangling")) {
                    spec.dangling.push_back(endpoint_from(d));
                }
                step.gadget = spec;
            }
            if (s.contains("matrix")) {
                step.matrix = mat2_from(s.at("matrix"));
            }
            if (s.contains("claimed_output")) {
                step.claimed_output = signature_from(s.at("claimed_output"));
            }
            if (s.contains("scale")) {
                step.scale = scalar_from(s.at("scale"));
            }
            if (s.contains("refs")) {
                for (const auto &r : s.at("refs")) {
                    step.refs.push_back(r.get<std::string>());
                }
            }
            if (s.contains("flip_mask")) {
                step.flip_mask = int_from(s.at("flip_mask"), "flip_mask");
            }
            cert.steps.push_back(std::move(step));
        }
        return cert;
    });
}

std::string certificate_to_json(const Certificate &cert) {
    json list = json::array();
    for (const auto &step : cert.steps) {
        json s{{"kind", step_kind_name(step.kind)}};
        if (!step.output.empty()) {
            s["output"] = step.output;
        }
        if (step.gadget) {
            json verts = json::array(), edges = json::array(), dangling = json::array();
            for (const auto &v : step.gadget->vertices) {
                verts.push_back(v);
            }
            for (const auto &e : step.gadget->edges) {
                edges.push_back(json::array({endpoint_json(e.a), endpoint_json(e.b)}));
            }
            for (const auto &d : step.gadget->dangling) {
                dangling.push_back(endpoint_json(d));
            }
            s["gadget"] = {{"vertices", verts}, {"edges", edges}, {"dangling", dangling}};
        }
        if (!step.input.empty()) {
            s["input"] = step.input;
        }
        if (step.matrix) {
            s["matrix"] = mat2_json(*step.matrix);
        }
        if (step.claimed_output) {
            s["claimed_output"] = signature_json(*step.claimed_output);
            s["scale"] = step.scale.str();
        }
        if (step.kind == StepKind::TheoremTerminal) {
            s["theorem"] = step.theorem;
            s["citation"] = step.citation;
            s["refs"] = step.refs;
            s["flip_mask"] = step.flip_mask;
        }
        if (!step.note.empty()) {
            s["note"] = step.note;
        }
        list.push_back(s);
    }
    return list.dump(2);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw HolantError(ErrorKind::PreconditionViolated, "cannot write '" + path + "'");
    }
    out << text << "\n";
}

}  // namespace holant
