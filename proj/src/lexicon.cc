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

#include "distract/lexicon.h"

#include <fstream>
#include <sstream>

namespace distract {

namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open " + path);
  return in;
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

IrregularVerbs IrregularVerbs::Parse(std::istream& in) {
  IrregularVerbs table;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw LexiconError("irregular verbs line " + std::to_string(line_number) +
                         ": expected lemma<TAB>participle");
    }
    const std::string_view lemma = Trim(line.substr(0, tab));
    const std::string_view participle = Trim(line.substr(tab + 1));
    if (lemma.empty() || participle.empty()) {
      throw LexiconError("irregular verbs line " + std::to_string(line_number) +
                         ": empty field");
    }
    table.participles_[ToLower(lemma)] = std::string(participle);
  }
  return table;
}

IrregularVerbs IrregularVerbs::Load(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return Parse(in);
}

const IrregularVerbs& IrregularVerbs::Builtin() {
  static const IrregularVerbs table = [] {
    std::istringstream in(kIrregularVerbsData);
    return Parse(in);
  }();
  return table;
}

std::optional<std::string> IrregularVerbs::Lookup(
    std::string_view lemma) const {
  auto it = participles_.find(lemma);
  if (it == participles_.end()) return std::nullopt;
  return it->second;
}

WordList WordList::Parse(std::istream& in) {
  WordList list;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    list.words_.insert(ToLower(line));
  }
  return list;
}

WordList WordList::Load(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return Parse(in);
}

const WordList& WordList::BuiltinReciprocalVerbs() {
  static const WordList list = [] {
    std::istringstream in(kReciprocalVerbsData);
    return Parse(in);
  }();
  return list;
}

bool WordList::contains(std::string_view word) const {
  return words_.find(ToLower(word)) != words_.end();
}

}  // namespace distract
