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

#include "affmatch/instance_io.h"

#include <fstream>
#include <sstream>

#include "affmatch/errors.h"
#include "json.hpp"

namespace affmatch {

namespace {

using Json = nlohmann::ordered_json;

std::string LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void Malformed(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::kSyntaxError, what, pointer);
}

const Json& Member(const Json& object, const std::string& key,
                   const std::string& pointer) {
  auto it = object.find(key);
  if (it == object.end()) Malformed(pointer, "missing member '" + key + "'");
  return *it;
}

RawMarket::LabelList Labels(const Json& value, const std::string& pointer) {
  if (!value.is_array()) Malformed(pointer, "expected an array of labels");
  RawMarket::LabelList out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      Malformed(pointer + "/" + std::to_string(i), "expected a string label");
    }
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, RawMarket::LabelList>> LabelMap(
    const Json& value, const std::string& pointer) {
  if (!value.is_object()) Malformed(pointer, "expected an object");
  std::vector<std::pair<std::string, RawMarket::LabelList>> out;
  for (auto it = value.begin(); it != value.end(); ++it) {
    out.emplace_back(it.key(), Labels(it.value(), pointer + "/" + it.key()));
  }
  return out;
}

GeneratorSpec ParseGenerator(const Json& value) {
  const std::string pointer = "/generator";
  if (!value.is_object()) Malformed(pointer, "expected an object");
  GeneratorSpec spec;
  const Json& seed = Member(value, "seed", pointer);
  const Json& n = Member(value, "n", pointer);
  const Json& affiliation = Member(value, "affiliation", pointer);
  const Json& density = Member(value, "density", pointer);
  const Json& strategy = Member(value, "strategy", pointer);
  const Json& lambda = Member(value, "lambda", pointer);
  if (!seed.is_number_unsigned()) Malformed(pointer + "/seed", "expected an unsigned integer");
  if (!n.is_number_integer()) Malformed(pointer + "/n", "expected an integer");
  if (!affiliation.is_string()) Malformed(pointer + "/affiliation", "expected a string");
  if (!density.is_number()) Malformed(pointer + "/density", "expected a number");
  if (!strategy.is_string()) Malformed(pointer + "/strategy", "expected a string");
  if (!lambda.is_number()) Malformed(pointer + "/lambda", "expected a number");
  spec.seed = seed.get<std::uint64_t>();
  spec.n = n.get<int>();
  spec.affiliation = ParseAffiliationPattern(affiliation.get<std::string>());
  spec.density = density.get<double>();
  spec.strategy = ParseStrategyKind(strategy.get<std::string>());
  spec.lambda = lambda.get<double>();
  return spec;
}

std::string Quote(const std::string& s) { return Json(s).dump(); }

std::string InlineLabels(const RawMarket::LabelList& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += Quote(labels[i]);
  }
  return out + "]";
}

void WriteLabelMap(
    std::ostringstream& out, const std::string& key,
    const std::vector<std::pair<std::string, RawMarket::LabelList>>& entries) {
  out << "  " << Quote(key) << ": {";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    " << Quote(entries[i].first) << ": "
        << InlineLabels(entries[i].second);
  }
  out << (entries.empty() ? "}" : "\n  }");
}

}  // namespace

InstanceDocument ParseInstance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kSyntaxError, e.what(), LineColumn(text, e.byte));
  }
  if (!root.is_object()) Malformed("", "document must be a JSON object");

  const Json& version = Member(root, "version", "");
  if (!version.is_string() || version.get<std::string>() != kInstanceVersion) {
    Malformed("/version",
              "expected version \"" + std::string(kInstanceVersion) + "\"");
  }

  RawMarket raw;
  raw.applicants = Labels(Member(root, "applicants", ""), "/applicants");
  raw.employers = Labels(Member(root, "employers", ""), "/employers");
  if (auto it = root.find("affiliations"); it != root.end()) {
    raw.affiliations = LabelMap(*it, "/affiliations");
  }
  raw.applicant_prefs =
      LabelMap(Member(root, "applicant_prefs", ""), "/applicant_prefs");

  const Json& employer_prefs = Member(root, "employer_prefs", "");
  if (!employer_prefs.is_object()) Malformed("/employer_prefs", "expected an object");
  for (auto it = employer_prefs.begin(); it != employer_prefs.end(); ++it) {
    const std::string pointer = "/employer_prefs/" + it.key();
    if (!it.value().is_array()) Malformed(pointer, "expected an array of tuples");
    std::vector<RawMarket::LabelList> tuples;
    for (std::size_t i = 0; i < it.value().size(); ++i) {
      tuples.push_back(Labels(it.value()[i], pointer + "/" + std::to_string(i)));
    }
    raw.employer_prefs.emplace_back(it.key(), std::move(tuples));
  }

  InstanceDocument document{ValidateMarket(raw), std::nullopt};
  if (auto it = root.find("generator"); it != root.end()) {
    document.generator = ParseGenerator(*it);
  }
  return document;
}

std::string SerializeInstance(const InstanceDocument& document) {
  const RawMarket raw = document.market.ToRaw();
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": " << Quote(std::string(kInstanceVersion)) << ",\n";
  out << "  \"applicants\": " << InlineLabels(raw.applicants) << ",\n";
  out << "  \"employers\": " << InlineLabels(raw.employers) << ",\n";
  WriteLabelMap(out, "affiliations", raw.affiliations);
  out << ",\n";
  WriteLabelMap(out, "applicant_prefs", raw.applicant_prefs);
  out << ",\n";
  out << "  \"employer_prefs\": {";
  for (std::size_t i = 0; i < raw.employer_prefs.size(); ++i) {
    const auto& [employer, tuples] = raw.employer_prefs[i];
    out << (i == 0 ? "\n" : ",\n") << "    " << Quote(employer) << ": [";
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      out << (k == 0 ? "\n" : ",\n") << "      " << InlineLabels(tuples[k]);
    }
    out << (tuples.empty() ? "]" : "\n    ]");
  }
  out << (raw.employer_prefs.empty() ? "}" : "\n  }");
  if (document.generator) {
    const GeneratorSpec& g = *document.generator;
    Json gen;
    gen["seed"] = g.seed;
    gen["n"] = g.n;
    gen["affiliation"] = std::string(AffiliationPatternName(g.affiliation));
    gen["density"] = g.density;
    gen["strategy"] = std::string(StrategyKindName(g.strategy));
    gen["lambda"] = g.lambda;
    out << ",\n  \"generator\": " << gen.dump();
  }
  out << "\n}\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kSyntaxError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace affmatch
