// Copyright 2026 The Facet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "facet/errors.hpp"

namespace facet {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::EmptySummary: return "EmptySummary";
    case Err::MalformedRecord: return "MalformedRecord";
    case Err::DuplicateId: return "DuplicateId";
    case Err::DuplicateAnnotation: return "DuplicateAnnotation";
    case Err::DuplicateCandidate: return "DuplicateCandidate";
    case Err::EmptyInput: return "EmptyInput";
    case Err::NoJudgments: return "NoJudgments";
    case Err::MixedSystems: return "MixedSystems";
    case Err::MissingCoverage: return "MissingCoverage";
    case Err::TooFewPoints: return "TooFewPoints";
    case Err::DuplicateCoverage: return "DuplicateCoverage";
    case Err::DegenerateVariance: return "DegenerateVariance";
    case Err::MissingLabel: return "MissingLabel";
    case Err::MissingScore: return "MissingScore";
    case Err::MissingCandidate: return "MissingCandidate";
    case Err::SingleClass: return "SingleClass";
    case Err::NoPositives: return "NoPositives";
    case Err::TooFewExamples: return "TooFewExamples";
    case Err::InvalidValue: return "InvalidValue";
    case Err::BadConfig: return "BadConfig";
    case Err::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace facet
