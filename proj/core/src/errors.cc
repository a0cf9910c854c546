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

#include "affmatch/errors.h"

#include <utility>

namespace affmatch {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kDuplicateAffiliation: return "DuplicateAffiliation";
    case ErrorKind::kInvalidTuple: return "InvalidTuple";
    case ErrorKind::kIncompleteProfile: return "IncompleteProfile";
    case ErrorKind::kIncompleteApplicantOrder: return "IncompleteApplicantOrder";
    case ErrorKind::kUnknownAgent: return "UnknownAgent";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kInconsistentProfiles: return "InconsistentProfiles";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

namespace {

std::string Compose(ErrorKind kind, const std::string& message,
                    const std::string& location) {
  std::string out(ErrorKindName(kind));
  if (!location.empty()) out += " at " + location;
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::string location)
    : std::runtime_error(Compose(kind, message, location)),
      kind_(kind),
      location_(std::move(location)),
      detail_(std::move(message)) {}

}  // namespace affmatch
