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

#include "distract/annotation.h"

#include <set>
#include <utility>

#include "json.hpp"

namespace distract {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using Kind = AnnotationError::Kind;

[[noreturn]] void Fail(Kind kind, const std::string& field,
                       const std::string& what) {
  std::string message;
  switch (kind) {
    case Kind::kMalformedRecord:
      message = "malformed record";
      break;
    case Kind::kMissingField:
      message = "missing field";
      break;
    case Kind::kInvariantViolation:
      message = "invariant violation";
      break;
    case Kind::kAmbiguousFrame:
      message = "ambiguous frame";
      break;
  }
  if (!field.empty()) message += " '" + field + "'";
  if (!what.empty()) message += ": " + what;
  throw AnnotationError(kind, field, message);
}

const json& Require(const json& object, const std::string& key,
                    const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) Fail(Kind::kMissingField, path + key, "");
  return *it;
}

std::string AsString(const json& value, const std::string& field) {
  if (!value.is_string()) Fail(Kind::kMalformedRecord, field, "expected string");
  return value.get<std::string>();
}

int AsInt(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    Fail(Kind::kMalformedRecord, field, "expected integer");
  }
  return value.get<int>();
}

const json& AsArray(const json& value, const std::string& field) {
  if (!value.is_array()) Fail(Kind::kMalformedRecord, field, "expected array");
  return value;
}

Span ParseSpan(const json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2) {
    Fail(Kind::kMalformedRecord, field, "expected [start, end]");
  }
  return Span{AsInt(value[0], field), AsInt(value[1], field)};
}

std::vector<std::string> StringArray(const json& sentence,
                                     const std::string& key,
                                     const std::string& path) {
  const std::string field = path + key;
  const json& array = AsArray(Require(sentence, key, path), field);
  std::vector<std::string> out;
  out.reserve(array.size());
  for (const json& item : array) out.push_back(AsString(item, field));
  return out;
}

SentenceAnno ParseSentence(const json& object, const std::string& name) {
  if (!object.is_object()) Fail(Kind::kMalformedRecord, name, "expected object");
  const std::string path = name + ".";

  std::vector<std::string> tokens = StringArray(object, "tokens", path);
  std::vector<std::string> pos = StringArray(object, "pos", path);
  std::vector<std::string> lemmas = StringArray(object, "lemmas", path);
  std::vector<std::string> labels = StringArray(object, "dep_labels", path);
  const json& heads = AsArray(Require(object, "dep_heads", path),
                              path + "dep_heads");

  const std::size_t n = tokens.size();
  auto check_length = [&](std::size_t got, const char* key) {
    if (got != n) {
      Fail(Kind::kInvariantViolation, path + key,
           "length " + std::to_string(got) + " != token count " +
               std::to_string(n));
    }
  };
  check_length(pos.size(), "pos");
  check_length(lemmas.size(), "lemmas");
  check_length(labels.size(), "dep_labels");
  check_length(heads.size(), "dep_heads");

  SentenceAnno sentence;
  sentence.tokens.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    TokenAnno& token = sentence.tokens[i];
    token.text = std::move(tokens[i]);
    token.pos = std::move(pos[i]);
    token.lemma = std::move(lemmas[i]);
    token.dep_head = AsInt(heads[i], path + "dep_heads");
    token.dep_label = std::move(labels[i]);
  }

  const json& frames = AsArray(Require(object, "srl", path), path + "srl");
  for (const json& item : frames) {
    if (!item.is_object()) {
      Fail(Kind::kMalformedRecord, path + "srl", "expected object");
    }
    SrlFrame frame;
    frame.predicate = AsInt(Require(item, "predicate", path + "srl."),
                            path + "srl.predicate");
    const json& args = Require(item, "args", path + "srl.");
    if (!args.is_object()) {
      Fail(Kind::kMalformedRecord, path + "srl.args", "expected object");
    }
    for (const auto& [role, span] : args.items()) {
      frame.args.emplace(role, ParseSpan(span, path + "srl.args." + role));
    }
    sentence.frames.push_back(std::move(frame));
  }

  const json& entities =
      AsArray(Require(object, "entities", path), path + "entities");
  for (const json& item : entities) {
    if (!item.is_object()) {
      Fail(Kind::kMalformedRecord, path + "entities", "expected object");
    }
    const std::string epath = path + "entities.";
    EntityAnno entity;
    entity.span.start = AsInt(Require(item, "start", epath), epath + "start");
    entity.span.end = AsInt(Require(item, "end", epath), epath + "end");
    entity.kind = AsString(Require(item, "type", epath), epath + "type");
    sentence.entities.push_back(std::move(entity));
  }

  ValidateSentence(sentence, name);
  return sentence;
}

ordered_json SentenceToJson(const SentenceAnno& sentence) {
  ordered_json tokens = ordered_json::array();
  ordered_json pos = ordered_json::array();
  ordered_json lemmas = ordered_json::array();
  ordered_json heads = ordered_json::array();
  ordered_json labels = ordered_json::array();
  for (const TokenAnno& token : sentence.tokens) {
    tokens.push_back(token.text);
    pos.push_back(token.pos);
    lemmas.push_back(token.lemma);
    heads.push_back(token.dep_head);
    labels.push_back(token.dep_label);
  }
  ordered_json srl = ordered_json::array();
  for (const SrlFrame& frame : sentence.frames) {
    ordered_json args = ordered_json::object();
    for (const auto& [role, span] : frame.args) {
      args[role] = {span.start, span.end};
    }
    srl.push_back({{"predicate", frame.predicate}, {"args", std::move(args)}});
  }
  ordered_json entities = ordered_json::array();
  for (const EntityAnno& entity : sentence.entities) {
    entities.push_back({{"start", entity.span.start},
                        {"end", entity.span.end},
                        {"type", entity.kind}});
  }
  ordered_json out;
  out["tokens"] = std::move(tokens);
  out["pos"] = std::move(pos);
  out["lemmas"] = std::move(lemmas);
  out["dep_heads"] = std::move(heads);
  out["dep_labels"] = std::move(labels);
  out["srl"] = std::move(srl);
  out["entities"] = std::move(entities);
  return out;
}

}  // namespace

std::string_view LabelName(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment:
      return "entailment";
    case NliLabel::kContradiction:
      return "contradiction";
    case NliLabel::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::optional<NliLabel> ParseLabel(std::string_view name) {
  for (NliLabel label : kAllLabels) {
    if (LabelName(label) == name) return label;
  }
  return std::nullopt;
}

const Span* SrlFrame::arg(std::string_view role) const {
  auto it = args.find(std::string(role));
  return it == args.end() ? nullptr : &it->second;
}

std::vector<std::string> SentenceAnno::texts() const {
  return texts(Span{0, size()});
}

std::vector<std::string> SentenceAnno::texts(Span span) const {
  std::vector<std::string> out;
  out.reserve(span.size());
  for (int i = span.start; i < span.end; ++i) out.push_back(tokens[i].text);
  return out;
}

void ValidateSentence(const SentenceAnno& sentence, const std::string& where) {
  const std::string path = where + ".";
  const int n = sentence.size();
  if (n == 0) Fail(Kind::kInvariantViolation, path + "tokens", "empty sentence");

  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const TokenAnno& token = sentence.tokens[i];
    const std::string at = "token " + std::to_string(i);
    if (token.text.empty()) {
      Fail(Kind::kInvariantViolation, path + "tokens", at + " is empty");
    }
    if (token.pos.empty()) {
      Fail(Kind::kInvariantViolation, path + "pos", at + " has empty tag");
    }
    if (token.dep_head == kRootHead) {
      ++roots;
    } else if (token.dep_head < 0 || token.dep_head >= n) {
      Fail(Kind::kInvariantViolation, path + "dep_heads",
           at + " head out of range");
    } else if (token.dep_head == i) {
      Fail(Kind::kInvariantViolation, path + "dep_heads",
           at + " is its own head");
    }
  }
  if (roots != 1) {
    Fail(Kind::kInvariantViolation, path + "dep_heads",
         std::to_string(roots) + " root tokens, expected exactly 1");
  }

  for (const SrlFrame& frame : sentence.frames) {
    if (frame.predicate < 0 || frame.predicate >= n) {
      Fail(Kind::kInvariantViolation, path + "srl.predicate",
           "index " + std::to_string(frame.predicate) + " out of range");
    }
    for (auto it = frame.args.begin(); it != frame.args.end(); ++it) {
      const auto& [role, span] = *it;
      const std::string field = path + "srl.args." + role;
      if (role.empty()) Fail(Kind::kInvariantViolation, field, "empty role");
      if (!span.valid_for(n)) {
        Fail(Kind::kInvariantViolation, field, "span out of bounds");
      }
      if (span.contains(frame.predicate)) {
        Fail(Kind::kInvariantViolation, field, "span contains the predicate");
      }
      for (auto other = std::next(it); other != frame.args.end(); ++other) {
        if (span.overlaps(other->second)) {
          Fail(Kind::kInvariantViolation, field,
               "overlaps role " + other->first);
        }
      }
    }
  }

  for (const EntityAnno& entity : sentence.entities) {
    if (!entity.span.valid_for(n)) {
      Fail(Kind::kInvariantViolation, path + "entities",
           "span out of bounds");
    }
    if (entity.kind.empty()) {
      Fail(Kind::kInvariantViolation, path + "entities.type", "empty type");
    }
  }
}

AnnotatedPair ParseAnnotatedPair(std::string_view line) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    Fail(Kind::kMalformedRecord, "", e.what());
  }
  if (!record.is_object()) Fail(Kind::kMalformedRecord, "", "expected object");

  AnnotatedPair pair;
  pair.id = AsString(Require(record, "id", ""), "id");
  const std::string label = AsString(Require(record, "label", ""), "label");
  std::optional<NliLabel> parsed = ParseLabel(label);
  if (!parsed) {
    Fail(Kind::kInvariantViolation, "label", "unknown class '" + label + "'");
  }
  pair.label = *parsed;
  pair.source = AsString(Require(record, "source", ""), "source");
  if (auto it = record.find("page_title");
      it != record.end() && !it->is_null()) {
    pair.page_title = AsString(*it, "page_title");
  }
  pair.premise = ParseSentence(Require(record, "premise", ""), "premise");
  pair.hypothesis =
      ParseSentence(Require(record, "hypothesis", ""), "hypothesis");
  return pair;
}

std::string SerializeAnnotatedPair(const AnnotatedPair& pair) {
  ordered_json out;
  out["id"] = pair.id;
  out["label"] = LabelName(pair.label);
  out["source"] = pair.source;
  if (pair.page_title) out["page_title"] = *pair.page_title;
  out["premise"] = SentenceToJson(pair.premise);
  out["hypothesis"] = SentenceToJson(pair.hypothesis);
  return out.dump();
}

int RootIndex(const SentenceAnno& sentence) {
  for (int i = 0; i < sentence.size(); ++i) {
    if (sentence.tokens[i].dep_head == kRootHead) return i;
  }
  throw std::logic_error("RootIndex: sentence has no root");
}

std::optional<SrlFrame> FrameAt(const SentenceAnno& sentence, int predicate) {
  const SrlFrame* found = nullptr;
  for (const SrlFrame& frame : sentence.frames) {
    if (frame.predicate != predicate) continue;
    if (found != nullptr) {
      Fail(Kind::kAmbiguousFrame, "srl.predicate",
           "two frames at index " + std::to_string(predicate));
    }
    found = &frame;
  }
  if (found == nullptr) return std::nullopt;
  return *found;
}

std::optional<int> SpanHead(const SentenceAnno& sentence, Span span) {
  for (int i = span.start; i < span.end; ++i) {
    const int head = sentence.tokens[i].dep_head;
    if (head == kRootHead || !span.contains(head)) return i;
  }
  return std::nullopt;
}

}  // namespace distract
