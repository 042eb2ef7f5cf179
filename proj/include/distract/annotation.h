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

#ifndef DISTRACT_ANNOTATION_H_
#define DISTRACT_ANNOTATION_H_

// Data model for linguistically annotated premise/hypothesis pairs.
//
// Annotations come from external tools (dependency parser, SRL, NER) and are
// exchanged as JSON Lines, one pair per line. Each sentence carries parallel
// per-token arrays plus SRL frames and entity spans over a single shared
// tokenization:
//
//   {"id": "...", "label": "entailment", "source": "snli",
//    "page_title": "Optional_Title",
//    "premise":    {<sentence>},
//    "hypothesis": {<sentence>}}
//
//   <sentence> = {"tokens": [...], "pos": [...], "lemmas": [...],
//                 "dep_heads": [...],   // 0-based, -1 marks the root
//                 "dep_labels": [...],
//                 "srl": [{"predicate": 3, "args": {"ARG0": [0, 2]}}],
//                 "entities": [{"start": 0, "end": 2, "type": "PERSON"}]}
//
// Spans are half-open token ranges.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distract {

enum class NliLabel { kEntailment, kContradiction, kNeutral };

inline constexpr NliLabel kAllLabels[] = {
    NliLabel::kEntailment, NliLabel::kContradiction, NliLabel::kNeutral};

std::string_view LabelName(NliLabel label);
// Returns nullopt for anything but the three lowercase class names.
std::optional<NliLabel> ParseLabel(std::string_view name);

inline constexpr int kRootHead = -1;

struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool contains(int index) const { return index >= start && index < end; }
  bool contains(const Span& other) const {
    return other.start >= start && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool valid_for(int length) const {
    return 0 <= start && start < end && end <= length;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct TokenAnno {
  std::string text;
  std::string pos;
  std::string lemma;
  int dep_head = kRootHead;
  std::string dep_label;

  friend bool operator==(const TokenAnno&, const TokenAnno&) = default;
};

struct SrlFrame {
  int predicate = 0;
  // Role name ("ARG0", "ARG1", "ARGM-LOC", ...) to argument span.
  std::map<std::string, Span> args;

  const Span* arg(std::string_view role) const;
  friend bool operator==(const SrlFrame&, const SrlFrame&) = default;
};

struct EntityAnno {
  Span span;
  std::string kind;

  friend bool operator==(const EntityAnno&, const EntityAnno&) = default;
};

struct SentenceAnno {
  std::vector<TokenAnno> tokens;
  std::vector<SrlFrame> frames;
  std::vector<EntityAnno> entities;

  int size() const { return static_cast<int>(tokens.size()); }
  std::vector<std::string> texts() const;
  std::vector<std::string> texts(Span span) const;
  friend bool operator==(const SentenceAnno&, const SentenceAnno&) = default;
};

struct AnnotatedPair {
  std::string id;
  NliLabel label = NliLabel::kNeutral;
  SentenceAnno premise;
  SentenceAnno hypothesis;
  std::optional<std::string> page_title;
  std::string source;

  friend bool operator==(const AnnotatedPair&, const AnnotatedPair&) = default;
};

class AnnotationError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedRecord,
    kMissingField,
    kInvariantViolation,
    kAmbiguousFrame,
  };

  AnnotationError(Kind kind, std::string field, const std::string& message)
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  Kind kind() const { return kind_; }
  // Dotted path of the offending field, e.g. "hypothesis.dep_heads".
  const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

// Parses and validates one JSON Lines record. Throws AnnotationError.
AnnotatedPair ParseAnnotatedPair(std::string_view line);

// Canonical single-line JSON; ParseAnnotatedPair inverts it.
std::string SerializeAnnotatedPair(const AnnotatedPair& pair);

// Checks every sentence invariant; `where` prefixes field names in errors.
void ValidateSentence(const SentenceAnno& sentence, const std::string& where);

// Index of the unique token whose head is ROOT.
int RootIndex(const SentenceAnno& sentence);

// The frame whose predicate is `predicate`, if any. Throws AnnotationError
// (kAmbiguousFrame) when two frames share the predicate.
std::optional<SrlFrame> FrameAt(const SentenceAnno& sentence, int predicate);

// The token inside `span` whose head lies outside it (or is ROOT). When
// several tokens leave the span the leftmost is returned; nullopt when none
// does, which only happens for cyclic head structures.
std::optional<int> SpanHead(const SentenceAnno& sentence, Span span);

}  // namespace distract

#endif  // DISTRACT_ANNOTATION_H_
