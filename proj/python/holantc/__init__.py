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

"""Exact Boolean Holant workbench: evaluation, entanglement and tractability classification."""

from holantc._holantc import (
    HolantError,
    Mat2,
    Scalar,
    Signature,
    classify,
    classify_family,
    equality,
    evaluate,
    exact_one,
    gadget_signature,
    holographic_transform,
    interpolation_demo,
    parse_set,
    tensor_factorize,
    ternary_class,
    verify_certificate,
    w_state,
)

__all__ = [
    "HolantError",
    "Mat2",
    "Scalar",
    "Signature",
    "classify",
    "classify_family",
    "equality",
    "evaluate",
    "exact_one",
    "gadget_signature",
    "holographic_transform",
    "interpolation_demo",
    "parse_set",
    "tensor_factorize",
    "ternary_class",
    "verify_certificate",
    "w_state",
]
