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

#pragma once

#include <stdexcept>
#include <string>

namespace facet {

// Error kinds raised by the library. The message carries the specifics
// (line numbers, offending ids); the kind is what callers dispatch on.
enum class Err {
  EmptySummary,
  MalformedRecord,
  DuplicateId,
  DuplicateAnnotation,
  DuplicateCandidate,
  EmptyInput,
  NoJudgments,
  MixedSystems,
  MissingCoverage,
  TooFewPoints,
  DuplicateCoverage,
  DegenerateVariance,
  MissingLabel,
  MissingScore,
  MissingCandidate,
  SingleClass,
  NoPositives,
  TooFewExamples,
  InvalidValue,
  BadConfig,
  IoFailure,
};

const char* err_name(Err kind);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& message)
      : std::runtime_error(std::string(err_name(kind)) + ": " + message),
        kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace facet
