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

#ifndef HOLANT_DICHOTOMY_H
#define HOLANT_DICHOTOMY_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holant/families.h"
#include "holant/grid.h"

namespace holant {

enum class StepKind {
    Pin,
    SelfLoop,
    ApplyUnary,
    TriangleGadget,
    ChainGadget,
    HolographicTransform,
    Factor,
    TheoremTerminal,
};

const char *step_kind_name(StepKind kind);
/// Throws Parse on an unknown name.
StepKind parse_step_kind(const std::string &name);

/// A gadget over named signatures.
///
/// Names are `F<k>` for the k-th signature of the input set, `delta0` and
/// `delta1` for the pins, and the outputs of earlier steps (`g<k>`).
struct GadgetSpec {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Endpoint> dangling;
};

struct ReductionStep {
    StepKind kind = StepKind::Pin;
    /// Name under which the output is available to later steps; empty for
    /// terminals.
    std::string output;
    /// Gadget construction (every kind except HolographicTransform and
    /// TheoremTerminal).
    std::optional<GadgetSpec> gadget;
    /// HolographicTransform: the transformed signature and the matrix. The
    /// output is a change-of-basis view and may not be wired into gadgets.
    std::string input;
    std::optional<Mat2> matrix;
    std::optional<Signature> claimed_output;
    /// The replay must equal scale * claimed_output.
    Scalar scale = 1;
    /// Terminal identifier (see terminal_citation) and the signatures it uses.
    std::string theorem;
    std::string citation;
    std::vector<std::string> refs;
    /// Terminal parameter: bit mask of flipped slots (interpolation form).
    int flip_mask = 0;
    std::string note;
};

struct Certificate {
    std::vector<ReductionStep> steps;
};

/// Free-text anchor for a terminal identifier: "ghz-csp", "w-hard",
/// "w-binary", "generalized-eq4" or "interpolate-eq4".
std::string terminal_citation(const std::string &theorem);

enum class VerdictTag { Tractable, Hard, Unknown };
const char *verdict_tag_name(VerdictTag tag);

struct Verdict {
    VerdictTag tag = VerdictTag::Unknown;
    /// The family that matched (Tractable only).
    FamilyVerdict family;
    /// Hard only; ends in a TheoremTerminal.
    Certificate certificate;
    std::string reason;
};

struct ClassifyOptions {
    /// Replaces the built-in S candidates; a failed search is then Unknown.
    std::optional<std::vector<Mat2>> cs_candidates;
};

/// Runs the tractable screens in the order T, A, SA, L, OE, KE, KM, KXM and
/// returns the first member; NotMember if all fail, Unknown if none matched
/// and some screen was inconclusive.
FamilyVerdict tractability_screen(std::span<const Signature> set, const ClassifyOptions &options = {});

Verdict classify_holant_c(std::span<const Signature> set, const ClassifyOptions &options = {});

/// Hardness pipeline from a ternary entangled member f of the set.
/// Throws PreconditionViolated if f is not in the set or not entangled.
Verdict ternary_hardness(const Signature &f, std::span<const Signature> set);

/// First of the three triangle gadgets (copies of f, one slot dangling per
/// copy) whose signature is genuinely entangled. Throws AllDegenerate.
Signature symmetrize_ghz(const Signature &f);

/// Symmetric ternary entangled signature realised from the W-type f, using
/// the binary entangled helper when f alone does not suffice. Throws
/// PreconditionViolated for a non-W f or a degenerate helper, and
/// InternalCaseGap if the gadget search runs dry.
Signature symmetrize_w(const Signature &f, const std::optional<Signature> &helper = std::nullopt);

/// Hardness for a ternary entangled f in K o M (or KX o M) when the set is
/// not contained in the same class.
Verdict case_km_pipeline(const Signature &f, std::span<const Signature> set);

/// Unary realised by closing two inputs of a ternary signature in K o M,
/// trying the slot pairs (1,2), (0,2), (0,1). Throws InternalCaseGap if all
/// three vanish.
Signature km_self_loop_unary(const Signature &f);

struct InterpolationDemo {
    /// b = c = 0: the signature is already a generalised equality.
    bool trivial = false;
    int occurrences = 0;
    /// Chain lengths whose Holant values form the linear system.
    std::vector<int> chain_lengths;
    bool invertible = false;
    /// Non-zero when M^s is a multiple of the identity for this chain length
    /// s, so the chain realises =4 up to a scalar without interpolation.
    int direct_chain = 0;
    Scalar recovered;
    Scalar expected;

    bool ok() const {
        return trivial || ((invertible || direct_chain > 0) && recovered == expected);
    }
};

/// Demonstrates realising =4 from a|0000> + b|0011> + c|1100> + d|1111>:
/// the target grid has `occurrences` (1 to 3) copies of =4; replacing them
/// by chains of f of several lengths and solving the resulting linear
/// system recovers the target Holant. Throws WrongSupport or RankDeficient.
InterpolationDemo interpolate_eq4_reduction(const Signature &f, int occurrences = 3);

/// The demonstration's target grid: `occurrences` copies of =4 in a ring,
/// each joined to a copy of f and two unaries. With chain > 0 every =4 is
/// replaced by a chain of that many copies of f.
SignatureGrid interpolation_target(const Signature &f, int occurrences, int chain);

/// Terminal for a 4-ary a|x> + b|x-bar> with ab != 0. Throws WrongArity or
/// WrongSupport.
ReductionStep generalized_eq4_reduction(const Signature &f, const std::string &ref = "F0");

struct VerifyResult {
    bool ok = true;
    /// Index of the first failing step, -1 when ok.
    int failing_step = -1;
    std::string reason;
};

/// Replays every gadget step and re-checks every terminal's side conditions.
VerifyResult certificate_verify(const Certificate &cert, std::span<const Signature> set);

}  // namespace holant

#endif
