# Copyright 2026 The holantc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import os
import pathlib

import pytest

import holantc as h

DATA = pathlib.Path(os.environ.get("HOLANT_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))


def test_scalar_arithmetic():
    i = h.Scalar("i")
    assert str(i * i) == "-1"
    assert h.Scalar("1/2") + h.Scalar("1/2") == h.Scalar(1)
    with pytest.raises(h.HolantError):
        h.Scalar("1 +")


def test_signature_construction():
    f = h.Signature.symmetric([1, 2, 1])
    assert f.arity == 2
    assert [str(x) for x in f.values] == ["1", "2", "2", "1"]
    assert h.Signature.from_json(f.to_json()) == f
    assert h.ternary_class(h.w_state()) == "W"
    assert h.ternary_class(h.equality(3)) == "GHZ"
    factors = h.tensor_factorize(h.Signature.ket("01"))
    assert [slots for slots, _ in factors] == [[0], [1]]
    with pytest.raises(h.HolantError):
        h.Signature(2, [1, 2])


def test_evaluate_grid_file():
    text = (DATA / "triangle-eq2.grid").read_text()
    assert str(h.evaluate(text)) == "2"
    assert str(h.evaluate(text, "brute")) == "2"
    k4 = (DATA / "k4-matchings.grid").read_text()
    assert str(h.evaluate(k4)) == "3"


def test_gadget_signature():
    g = h.gadget_signature((DATA / "path-gadget.grid").read_text())
    assert [str(x) for x in g.values] == ["5", "4", "4", "5"]


def test_classify_and_verify():
    hard = [h.equality(3), h.Signature.symmetric([1, 2, 1])]
    v = h.classify(hard)
    assert v["verdict"] == "Hard"
    ok, step, reason = h.verify_certificate(v["certificate"], hard)
    assert ok and step == -1
    ok, step, _ = h.verify_certificate(v["certificate"], [h.equality(4)])
    assert not ok and step == 0

    t = h.classify([h.equality(4)])
    assert t["verdict"] == "Tractable"
    assert t["family"]["family"] == "A"
    kw = h.holographic_transform(h.Mat2("K"), h.w_state())
    assert h.classify([kw])["family"]["family"] == "KM"


def test_classify_family():
    assert h.classify_family([h.equality(3)], "A")["member"] == "member"
    assert h.classify_family([h.w_state()], "A")["member"] == "not-member"
    with pytest.raises(h.HolantError):
        h.classify_family([h.w_state()], "nope")


def test_interpolation_demo():
    f = h.Signature(4, ["1", 0, 0, "1"] + [0] * 11 + ["1"])
    d = h.interpolation_demo(f, 3)
    assert d["invertible"] and d["ok"]
    assert d["recovered"] == d["expected"]
    with pytest.raises(h.HolantError):
        h.interpolation_demo(h.Signature(4, [1, 0, 0, 2] + [0] * 8 + [2, 0, 0, 4]))
