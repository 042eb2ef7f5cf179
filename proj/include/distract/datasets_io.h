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

#ifndef DISTRACT_DATASETS_IO_H_
#define DISTRACT_DATASETS_IO_H_

// Corpus readers (SNLI, FEVER), the generated-example writer and per-run
// statistics.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distract/annotation.h"
#include "distract/example.h"
#include "distract/person_reversal.h"
#include "distract/skip.h"
#include "json.hpp"

namespace distract {

// Bad input data. `line` is 1-based, 0 when not tied to a line.
class DataError : public std::runtime_error {
 public:
  DataError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  // The message without the "source:line: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string detail_;
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SplitTag { kTrain, kValidation, kTest };

std::string_view SplitName(SplitTag split);
// Accepts "train", "validation"/"dev", "test".
std::optional<SplitTag> ParseSplit(std::string_view name);
// Split named in a corpus file name such as "snli_1.0_dev.jsonl".
std::optional<SplitTag> InferSplit(std::string_view path);

struct SnliRecord {
  std::string id;
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kNeutral;
};

// Streams the public SNLI JSON Lines release. Pairs whose gold_label is "-"
// (no annotator consensus) are dropped and counted.
class SnliReader {
 public:
  explicit SnliReader(std::istream& in, std::string source = "snli")
      : in_(in), source_(std::move(source)) {}

  // Next usable record, or nullopt at end of input. Throws DataError.
  std::optional<SnliRecord> Next();

  std::size_t line_number() const { return line_number_; }
  std::size_t skipped_no_consensus() const { return skipped_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_number_ = 0;
  std::size_t skipped_ = 0;
};

FeverClaimRecord ParseFeverClaim(std::string_view line);
RetrievedEvidence ParseRetrievedEvidence(std::string_view line);

// One retrieved evidence sentence labeled against its claim.
struct FeverPair {
  long long claim_id = 0;
  std::string page_title;
  int sentence_index = 0;
  std::string premise;     // title-prefixed evidence sentence
  std::string hypothesis;  // the claim
  NliLabel label = NliLabel::kNeutral;
  bool evidence_is_gold = false;

  GeneratedExample ToExample() const;
};

// Joins retrieved rows to claims by id, in retrieved-file order. Throws
// DataError, including for rows naming an unknown claim id.
std::vector<FeverPair> ReadFever(std::istream& claims, std::istream& retrieved);

std::string ExampleToJsonLine(const GeneratedExample& example);
GeneratedExample ParseExampleLine(std::string_view line);

// One JSON line per example, in order. Returns the count written.
std::size_t WriteExamples(const std::vector<GeneratedExample>& examples,
                          std::ostream& out);
std::size_t WriteExamples(const std::vector<GeneratedExample>& examples,
                          const std::string& path);
std::vector<GeneratedExample> ReadExamples(std::istream& in);

// Per-transform yield: inputs == outputs + sum(skips).
struct TransformStats {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::map<std::string, std::size_t> skips;

  void RecordOutput();
  void RecordSkip(SkipReason reason);
  std::size_t skipped() const;
};

struct RunStats {
  std::map<std::string, TransformStats> transforms;
  std::map<std::string, std::size_t> labels;  // emitted labels
  std::optional<SplitTag> split;

  TransformStats& operator[](Transform transform);
  nlohmann::ordered_json ToJson() const;
};

// Writes `text` to `path` through a temporary file and a rename.
void WriteFileAtomically(const std::string& path, const std::string& text);

}  // namespace distract

#endif  // DISTRACT_DATASETS_IO_H_
