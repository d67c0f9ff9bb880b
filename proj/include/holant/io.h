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

#ifndef HOLANT_IO_H
#define HOLANT_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "holant/dichotomy.h"
#include "holant/grid.h"

namespace holant {

/// JSON interchange formats. Scalars are written as literal strings
/// ("1/2 - w^3"); readers also accept bare JSON integers. Every reader throws
/// HolantError(Parse) on malformed input.

/// {"arity": n, "values": [...]} or {"symmetric": [...]}.
Signature parse_signature_json(std::string_view text);
std::string signature_to_json(const Signature &f);

/// {"signatures": [...]} or a bare array of signature objects.
std::vector<Signature> parse_set_json(std::string_view text);
std::string set_to_json(std::span<const Signature> set);

/// {"signatures": {name: sig}, "vertices": [{"sig": name}], "edges":
/// [[[v, slot], [v, slot]]], "dangling": [[v, slot]], "side": ["L" | "R"]}.
SignatureGrid parse_grid_json(std::string_view text);
std::string grid_to_json(const SignatureGrid &g);

/// A matrix name (I, T, X, K, KX, Z, H, S) or "[[a, b], [c, d]]".
Mat2 parse_mat2(std::string_view text);

/// A JSON array of matrix literals, or {"candidates": [...]}.
std::vector<Mat2> parse_candidates_json(std::string_view text);

/// A JSON array of steps (an object {"steps": [...]} is also accepted).
Certificate parse_certificate_json(std::string_view text);
std::string certificate_to_json(const Certificate &cert);

/// Throws Parse if the file cannot be read.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace holant

#endif
