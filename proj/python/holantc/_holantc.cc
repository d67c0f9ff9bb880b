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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holant/dichotomy.h"
#include "holant/entanglement.h"
#include "holant/error.h"
#include "holant/io.h"
#include "holant/tractable_eval.h"

namespace py = pybind11;
using namespace holant;

namespace {

Scalar to_scalar(const py::handle &h) {
    if (py::isinstance<Scalar>(h)) {
        return h.cast<Scalar>();
    }
    if (py::isinstance<py::int_>(h)) {
        return Scalar(h.cast<long>());
    }
    return Scalar::parse(py::str(h).cast<std::string>());
}

std::vector<Scalar> to_scalars(const py::iterable &items) {
    std::vector<Scalar> out;
    for (const auto &x : items) {
        out.push_back(to_scalar(x));
    }
    return out;
}

py::dict family_dict(const FamilyVerdict &v) {
    py::dict d;
    d["member"] = membership_name(v.member);
    d["family"] = v.family;
    d["transform"] = v.transform ? py::cast(v.transform->str()) : py::none();
    d["witness"] = v.witness;
    d["reason"] = v.reason;
    return d;
}

FamilyVerdict family_check(const std::vector<Signature> &set, const std::string &family) {
    if (family == "T") {
        return in_T_closure(set);
    }
    if (family == "OE") {
        return exists_orthogonal_O(set);
    }
    if (family == "KE") {
        return in_transformed_closure(set, mats::K(), BaseFamily::E);
    }
    if (family == "KM") {
        return in_transformed_closure(set, mats::K(), BaseFamily::M);
    }
    if (family == "KXM") {
        return in_transformed_closure(set, mats::KX(), BaseFamily::M);
    }
    if (family == "A") {
        return in_A(set);
    }
    if (family == "L") {
        return in_L_set(set);
    }
    if (family == "SA") {
        return exists_S_in_cS(set);
    }
    if (family == "holant-star") {
        return holant_star_tractable(set);
    }
    throw HolantError(ErrorKind::PreconditionViolated, "unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_holantc, m) {
    m.doc() = "Exact Boolean Holant workbench over Q(zeta_8)";

    py::register_exception<HolantError>(m, "HolantError", PyExc_ValueError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const py::object &x) { return to_scalar(x); }), py::arg("value") = 0)
        .def("is_zero", &Scalar::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar &s) { return "Scalar('" + s.str() + "')"; });

    py::class_<Mat2>(m, "Mat2")
        .def(py::init([](const std::string &text) { return parse_mat2(text); }), py::arg("literal"))
        .def("inverse", &Mat2::inverse)
        .def("det", &Mat2::det)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Mat2::str)
        .def("__repr__", [](const Mat2 &x) { return "Mat2('" + x.str() + "')"; });

    py::class_<Signature>(m, "Signature")
        .def(py::init([](int arity, const py::iterable &values) { return Signature(arity, to_scalars(values)); }),
             py::arg("arity"), py::arg("values"))
        .def_static(
            "symmetric", [](const py::iterable &w) { return Signature::from_symmetric(to_scalars(w)); },
            py::arg("weights"))
        .def_static("ket", [](const std::string &bits) { return Signature::ket(bits); })
        .def_static("from_json", [](const std::string &text) { return parse_signature_json(text); })
        .def("to_json", [](const Signature &f) { return signature_to_json(f); })
        .def_property_readonly("arity", &Signature::arity)
        .def_property_readonly("values", [](const Signature &f) { return f.values(); })
        .def("__getitem__", [](const Signature &f, size_t i) {
            if (i >= f.size()) {
                throw py::index_error();
            }
            return f[i];
        })
        .def("__len__", &Signature::size)
        .def("scaled", [](const Signature &f, const py::object &c) { return f.scaled(to_scalar(c)); })
        .def(py::self == py::self)
        .def("__str__", &Signature::str)
        .def("__repr__", [](const Signature &f) { return "Signature(" + f.str() + ")"; });

    m.def("equality", &sigs::equality, py::arg("arity"));
    m.def("exact_one", &sigs::exact_one, py::arg("arity"));
    m.def("w_state", &sigs::w_state);
    m.def("holographic_transform", &holographic_transform, py::arg("m"), py::arg("f"));
    m.def("ternary_class", [](const Signature &f) { return std::string(ternary_tag_name(ternary_class(f).tag)); });
    m.def("tensor_factorize", [](const Signature &f) {
        std::vector<std::pair<std::vector<int>, Signature>> out;
        for (auto &fac : tensor_factorize(f)) {
            out.emplace_back(fac.slots, fac.sig);
        }
        return out;
    });
    m.def("parse_set", &parse_set_json, py::arg("text"));

    m.def(
        "evaluate",
        [](const std::string &grid_json, const std::string &method) {
            SignatureGrid g = parse_grid_json(grid_json);
            if (method == "brute") {
                return holant_bruteforce(g);
            }
            if (method == "contract") {
                return holant_contract(g);
            }
            if (method == "family") {
                return eval_by_family(g).value;
            }
            throw HolantError(ErrorKind::PreconditionViolated, "method must be brute, contract or family");
        },
        py::arg("grid_json"), py::arg("method") = "contract");
    m.def(
        "gadget_signature", [](const std::string &grid_json) { return gadget_signature(parse_grid_json(grid_json)); },
        py::arg("grid_json"));

    m.def(
        "classify",
        [](const std::vector<Signature> &set) {
            Verdict v = classify_holant_c(set);
            py::dict d;
            d["verdict"] = verdict_tag_name(v.tag);
            d["reason"] = v.reason;
            d["family"] = v.tag == VerdictTag::Tractable ? py::object(family_dict(v.family)) : py::none();
            d["certificate"] = certificate_to_json(v.certificate);
            return d;
        },
        py::arg("signatures"));
    m.def(
        "classify_family",
        [](const std::vector<Signature> &set, const std::string &family) {
            return family_dict(family_check(set, family));
        },
        py::arg("signatures"), py::arg("family"));
    m.def(
        "verify_certificate",
        [](const std::string &cert_json, const std::vector<Signature> &set) {
            VerifyResult r = certificate_verify(parse_certificate_json(cert_json), set);
            return py::make_tuple(r.ok, r.failing_step, r.reason);
        },
        py::arg("certificate_json"), py::arg("signatures"));
    m.def(
        "interpolation_demo",
        [](const Signature &f, int occurrences) {
            InterpolationDemo d = interpolate_eq4_reduction(f, occurrences);
            py::dict out;
            out["trivial"] = d.trivial;
            out["invertible"] = d.invertible;
            out["direct_chain"] = d.direct_chain;
            out["chain_lengths"] = d.chain_lengths;
            out["recovered"] = d.recovered;
            out["expected"] = d.expected;
            out["ok"] = d.ok();
            return out;
        },
        py::arg("f"), py::arg("occurrences") = 3);
}
