// Copyright 2026 The Distract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distract/datasets_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace distract {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json ParseJsonObject(std::string_view line, const std::string& source,
                     std::size_t line_number) {
  json value;
  try {
    value = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(source, line_number, e.what());
  }
  if (!value.is_object()) {
    throw DataError(source, line_number, "expected a JSON object");
  }
  return value;
}

template <typename T>
T Field(const json& object, const char* key, const std::string& source,
        std::size_t line_number) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw DataError(source, line_number, std::string("missing field '") + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw DataError(source, line_number,
                    std::string("field '") + key + "' has the wrong type");
  }
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

DataError::DataError(std::string source, std::size_t line,
                     const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      detail_(message) {}

std::string_view SplitName(SplitTag split) {
  switch (split) {
    case SplitTag::kTrain:
      return "train";
    case SplitTag::kValidation:
      return "validation";
    case SplitTag::kTest:
      return "test";
  }
  return "train";
}

std::optional<SplitTag> ParseSplit(std::string_view name) {
  if (name == "train") return SplitTag::kTrain;
  if (name == "validation" || name == "dev") return SplitTag::kValidation;
  if (name == "test") return SplitTag::kTest;
  return std::nullopt;
}

std::optional<SplitTag> InferSplit(std::string_view path) {
  const std::string stem = std::filesystem::path(path).stem().string();
  std::optional<SplitTag> found;
  std::string word;
  for (std::size_t i = 0; i <= stem.size(); ++i) {
    const char c = i < stem.size() ? stem[i] : '_';
    if (c == '_' || c == '-' || c == '.') {
      if (auto split = ParseSplit(word)) found = split;
      word.clear();
    } else {
      word += c;
    }
  }
  return found;
}

std::optional<SnliRecord> SnliReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (IsBlank(line)) continue;
    const json record = ParseJsonObject(line, source_, line_number_);
    const auto gold = Field<std::string>(record, "gold_label", source_,
                                         line_number_);
    if (gold == "-") {
      ++skipped_;
      continue;
    }
    std::optional<NliLabel> label = ParseLabel(gold);
    if (!label) {
      throw DataError(source_, line_number_, "unknown gold_label '" + gold + "'");
    }
    SnliRecord out;
    out.premise = Field<std::string>(record, "sentence1", source_, line_number_);
    out.hypothesis =
        Field<std::string>(record, "sentence2", source_, line_number_);
    out.label = *label;
    if (auto it = record.find("pairID"); it != record.end() && it->is_string()) {
      out.id = it->get<std::string>();
    } else {
      out.id = source_ + ":" + std::to_string(line_number_);
    }
    return out;
  }
  return std::nullopt;
}

FeverClaimRecord ParseFeverClaim(std::string_view line) {
  const std::string source = "claims";
  const json record = ParseJsonObject(line, source, 0);
  FeverClaimRecord claim;
  claim.claim_id = Field<long long>(record, "id", source, 0);
  claim.claim_text = Field<std::string>(record, "claim", source, 0);
  const auto label = Field<std::string>(record, "label", source, 0);
  std::optional<ClaimLabel> parsed = ParseClaimLabel(label);
  if (!parsed) throw DataError(source, 0, "unknown claim label '" + label + "'");
  claim.claim_label = *parsed;

  const auto evidence = record.find("evidence");
  if (evidence != record.end() && !evidence->is_null()) {
    if (!evidence->is_array()) {
      throw DataError(source, 0, "field 'evidence' must be an array");
    }
    for (const json& group : *evidence) {
      if (!group.is_array()) {
        throw DataError(source, 0, "evidence sets must be arrays");
      }
      for (const json& item : group) {
        // [annotation_id, evidence_id, page_title | null, sentence | null]
        if (!item.is_array() || item.size() < 4) {
          throw DataError(source, 0, "evidence items must have 4 fields");
        }
        if (item[2].is_null() || item[3].is_null()) continue;
        if (!item[2].is_string() || !item[3].is_number_integer()) {
          throw DataError(source, 0, "evidence item has the wrong types");
        }
        claim.gold_evidence.emplace(item[2].get<std::string>(),
                                    item[3].get<int>());
      }
    }
  }
  const bool nei = claim.claim_label == ClaimLabel::kNotEnoughInfo;
  if (nei != claim.gold_evidence.empty()) {
    throw DataError(source, 0,
                    "claim " + std::to_string(claim.claim_id) +
                        (nei ? " is NOT ENOUGH INFO but lists evidence"
                             : " has no gold evidence"));
  }
  return claim;
}

RetrievedEvidence ParseRetrievedEvidence(std::string_view line) {
  const std::string source = "retrieved";
  const json record = ParseJsonObject(line, source, 0);
  RetrievedEvidence row;
  row.claim_id = Field<long long>(record, "claim_id", source, 0);
  row.page_title = Field<std::string>(record, "page", source, 0);
  row.sentence_index = Field<int>(record, "sentence_index", source, 0);
  row.sentence_text = Field<std::string>(record, "text", source, 0);
  if (row.sentence_index < 0) {
    throw DataError(source, 0, "sentence_index must be non-negative");
  }
  return row;
}

GeneratedExample FeverPair::ToExample() const {
  ordered_json meta;
  meta["claim_id"] = claim_id;
  meta["page"] = page_title;
  meta["sentence_index"] = sentence_index;
  meta["gold_evidence"] = evidence_is_gold;
  return GeneratedExample{
      premise,
      hypothesis,
      label,
      Transform::kOriginal,
      std::to_string(claim_id) + ":" + page_title + ":" +
          std::to_string(sentence_index),
      std::move(meta)};
}

std::vector<FeverPair> ReadFever(std::istream& claims,
                                 std::istream& retrieved) {
  std::unordered_map<long long, FeverClaimRecord> by_id;
  std::string line;
  std::size_t number = 0;
  while (std::getline(claims, line)) {
    ++number;
    if (IsBlank(line)) continue;
    try {
      FeverClaimRecord claim = ParseFeverClaim(line);
      const long long id = claim.claim_id;
      if (!by_id.emplace(id, std::move(claim)).second) {
        throw DataError("claims", number, "duplicate claim id " + std::to_string(id));
      }
    } catch (const DataError& e) {
      if (e.line() != 0) throw;
      throw DataError("claims", number, e.detail());
    }
  }

  std::vector<FeverPair> pairs;
  number = 0;
  while (std::getline(retrieved, line)) {
    ++number;
    if (IsBlank(line)) continue;
    RetrievedEvidence row;
    try {
      row = ParseRetrievedEvidence(line);
    } catch (const DataError& e) {
      throw DataError("retrieved", number, e.detail());
    }
    auto it = by_id.find(row.claim_id);
    if (it == by_id.end()) {
      throw DataError("retrieved", number,
                      "unknown claim id " + std::to_string(row.claim_id));
    }
    const FeverClaimRecord& claim = it->second;
    FeverPair pair;
    pair.claim_id = row.claim_id;
    pair.page_title = row.page_title;
    pair.sentence_index = row.sentence_index;
    pair.evidence_is_gold =
        claim.gold_evidence.count({row.page_title, row.sentence_index}) > 0;
    pair.label = LabelFeverPair(claim.claim_label, pair.evidence_is_gold);
    pair.premise = PrefixTitle(row.page_title, row.sentence_text);
    pair.hypothesis = claim.claim_text;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::string ExampleToJsonLine(const GeneratedExample& example) {
  ordered_json out;
  out["premise"] = example.premise;
  out["hypothesis"] = example.hypothesis;
  out["label"] = LabelName(example.label);
  out["transform"] = TransformName(example.transform);
  out["source_id"] = example.source_id;
  if (!example.meta.is_null()) out["meta"] = example.meta;
  return out.dump();
}

GeneratedExample ParseExampleLine(std::string_view line) {
  const std::string source = "examples";
  ordered_json record;
  try {
    record = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw DataError(source, 0, e.what());
  }
  auto get = [&](const char* key) {
    auto it = record.find(key);
    if (it == record.end() || !it->is_string()) {
      throw DataError(source, 0, std::string("missing string field '") + key + "'");
    }
    return it->get<std::string>();
  };
  GeneratedExample example;
  example.premise = get("premise");
  example.hypothesis = get("hypothesis");
  const std::string label = get("label");
  const std::string transform = get("transform");
  example.source_id = get("source_id");
  auto parsed_label = ParseLabel(label);
  auto parsed_transform = ParseTransform(transform);
  if (!parsed_label) throw DataError(source, 0, "unknown label '" + label + "'");
  if (!parsed_transform) {
    throw DataError(source, 0, "unknown transform '" + transform + "'");
  }
  example.label = *parsed_label;
  example.transform = *parsed_transform;
  if (auto it = record.find("meta"); it != record.end()) example.meta = *it;
  return example;
}

std::size_t WriteExamples(const std::vector<GeneratedExample>& examples,
                          std::ostream& out) {
  for (const GeneratedExample& example : examples) {
    out << ExampleToJsonLine(example) << '\n';
  }
  if (!out) throw IoFailure("write failed");
  return examples.size();
}

std::size_t WriteExamples(const std::vector<GeneratedExample>& examples,
                          const std::string& path) {
  std::ostringstream buffer;
  const std::size_t count = WriteExamples(examples, buffer);
  WriteFileAtomically(path, buffer.str());
  return count;
}

std::vector<GeneratedExample> ReadExamples(std::istream& in) {
  std::vector<GeneratedExample> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (IsBlank(line)) continue;
    try {
      out.push_back(ParseExampleLine(line));
    } catch (const DataError& e) {
      throw DataError("examples", number, e.detail());
    }
  }
  return out;
}

void TransformStats::RecordOutput() {
  ++inputs;
  ++outputs;
}

void TransformStats::RecordSkip(SkipReason reason) {
  ++inputs;
  ++skips[std::string(SkipReasonName(reason))];
}

std::size_t TransformStats::skipped() const {
  std::size_t total = 0;
  for (const auto& [reason, count] : skips) total += count;
  return total;
}

TransformStats& RunStats::operator[](Transform transform) {
  return transforms[std::string(TransformName(transform))];
}

ordered_json RunStats::ToJson() const {
  ordered_json out = ordered_json::object();
  if (split) out["split"] = SplitName(*split);
  ordered_json per_transform = ordered_json::object();
  for (const auto& [name, stats] : transforms) {
    ordered_json skips = ordered_json::object();
    for (const auto& [reason, count] : stats.skips) skips[reason] = count;
    per_transform[name] = {{"inputs", stats.inputs},
                           {"outputs", stats.outputs},
                           {"skipped", stats.skipped()},
                           {"skips", std::move(skips)}};
  }
  out["transforms"] = std::move(per_transform);
  ordered_json labels = ordered_json::object();
  for (const auto& [name, count] : this->labels) labels[name] = count;
  out["labels"] = std::move(labels);
  return out;
}

void WriteFileAtomically(const std::string& path, const std::string& text) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + temp + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoFailure("write to " + temp + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoFailure("cannot rename " + temp + " to " + path);
  }
}

}  // namespace distract
