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

// Instance documents: the JSON file format for markets.
//
//   {
//     "version": "affmatch-instance/1",
//     "applicants": ["a1", ...],
//     "employers": ["e1", ...],
//     "affiliations": {"e1": ["a1"], ...},          // ordered affiliates
//     "applicant_prefs": {"a1": ["e3", "e2", "e1"], ...},   // best-first
//     "employer_prefs": {"e1": [["a2", "e3"], ...], ...},   // best-first;
//                                                   // [hire, placements...]
//     "generator": {...}                            // optional provenance
//   }
//
// Serialization is canonical: fixed key order, roster order for every map,
// one line per tuple. parse(serialize(doc)) == doc and serialize is a pure
// function of the document.

#ifndef AFFMATCH_INSTANCE_IO_H_
#define AFFMATCH_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "affmatch/generator.h"
#include "affmatch/market.h"

namespace affmatch {

inline constexpr std::string_view kInstanceVersion = "affmatch-instance/1";

struct InstanceDocument {
  Market market;
  std::optional<GeneratorSpec> generator;

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

// Throws SyntaxError (location "line:column" or a JSON pointer) for malformed
// documents and the ValidateMarket errors for invalid markets.
InstanceDocument ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceDocument& document);

// Reads a whole file; throws SyntaxError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace affmatch

#endif  // AFFMATCH_INSTANCE_IO_H_
