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

#ifndef HOLANT_ERROR_H
#define HOLANT_ERROR_H

#include <stdexcept>
#include <string>

namespace holant {

enum class ErrorKind {
    DivisionByZero,
    SingularMatrix,
    ArityLimit,
    SlotOutOfRange,
    InvalidLoop,
    InvalidPermutation,
    ZeroSignature,
    WrongArity,
    InvalidGrid,
    DanglingEdges,
    EdgeLimit,
    ContractionOverflow,
    NotInFamily,
    ProfileUndefined,
    ExhaustionFailure,
    AllDegenerate,
    PreconditionViolated,
    RankDeficient,
    WrongSupport,
    InternalCaseGap,
    Parse,
};

const char *error_kind_name(ErrorKind kind);

class HolantError : public std::runtime_error {
   public:
    HolantError(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace holant

#endif
