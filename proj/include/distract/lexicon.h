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

#ifndef DISTRACT_LEXICON_H_
#define DISTRACT_LEXICON_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace distract {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Irregular past participles, read from `lemma<TAB>participle` lines.
// Blank lines and lines starting with '#' are ignored.
class IrregularVerbs {
 public:
  static IrregularVerbs Parse(std::istream& in);
  static IrregularVerbs Load(const std::string& path);
  // The table shipped in data/irregular_verbs.tsv, compiled in.
  static const IrregularVerbs& Builtin();

  std::optional<std::string> Lookup(std::string_view lemma) const;
  std::size_t size() const { return participles_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> participles_;
};

// A set of lowercase lemmas, one per line, '#' comments.
class WordList {
 public:
  static WordList Parse(std::istream& in);
  static WordList Load(const std::string& path);
  // data/reciprocal_verbs.txt, compiled in.
  static const WordList& BuiltinReciprocalVerbs();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Embedded copies of the data files (generated at build time).
extern const char* const kIrregularVerbsData;
extern const char* const kReciprocalVerbsData;

std::string ToLower(std::string_view text);

}  // namespace distract

#endif  // DISTRACT_LEXICON_H_
