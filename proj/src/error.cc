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

#include "holant/error.h"

namespace holant {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::SingularMatrix:
            return "SingularMatrix";
        case ErrorKind::ArityLimit:
            return "ArityLimit";
        case ErrorKind::SlotOutOfRange:
            return "SlotOutOfRange";
        case ErrorKind::InvalidLoop:
            return "InvalidLoop";
        case ErrorKind::InvalidPermutation:
            return "InvalidPermutation";
        case ErrorKind::ZeroSignature:
            return "ZeroSignature";
        case ErrorKind::WrongArity:
            return "WrongArity";
        case ErrorKind::InvalidGrid:
            return "InvalidGrid";
        case ErrorKind::DanglingEdges:
            return "DanglingEdges";
        case ErrorKind::EdgeLimit:
            return "EdgeLimit";
        case ErrorKind::ContractionOverflow:
            return "ContractionOverflow";
        case ErrorKind::NotInFamily:
            return "NotInFamily";
        case ErrorKind::ProfileUndefined:
            return "ProfileUndefined";
        case ErrorKind::ExhaustionFailure:
            return "ExhaustionFailure";
        case ErrorKind::AllDegenerate:
            return "AllDegenerate";
        case ErrorKind::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorKind::RankDeficient:
            return "RankDeficient";
        case ErrorKind::WrongSupport:
            return "WrongSupport";
        case ErrorKind::InternalCaseGap:
            return "InternalCaseGap";
        case ErrorKind::Parse:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace holant
