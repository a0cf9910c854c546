// Copyright 2026 The affmatch Authors.
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

#ifndef AFFMATCH_ERRORS_H_
#define AFFMATCH_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace affmatch {

enum class ErrorKind {
  kSyntaxError,
  kSizeMismatch,
  kDuplicateLabel,
  kDuplicateAffiliation,
  kInvalidTuple,
  kIncompleteProfile,
  kIncompleteApplicantOrder,
  kUnknownAgent,
  kInstanceTooLarge,
  kInconsistentProfiles,
  kInvalidConfig,
  kInvalidSpec,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception. `location` is a
// JSON pointer into the instance document (e.g. "/employer_prefs/e2") or a
// "line:column" position for syntax errors; empty when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string location = {});

  ErrorKind kind() const { return kind_; }
  const std::string& location() const { return location_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string location_;
  std::string detail_;
};

}  // namespace affmatch

#endif  // AFFMATCH_ERRORS_H_
