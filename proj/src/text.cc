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

#include "distract/text.h"

#include <algorithm>
#include <array>

#include "distract/lexicon.h"

namespace distract {

namespace {

bool AttachesLeft(std::string_view token) {
  static constexpr std::array<std::string_view, 14> kClosers = {
      ".", ",", ":", ";", "!", "?", "%", ")", "]", "}", "...", "''", "'", "n't"};
  if (std::find(kClosers.begin(), kClosers.end(), token) != kClosers.end()) {
    return true;
  }
  // Clitics: 's 're 've 'll 'd 'm and their uppercase variants.
  if (token.size() >= 2 && token.size() <= 3 && token.front() == '\'') {
    const std::string rest = ToLower(token.substr(1));
    return rest == "s" || rest == "re" || rest == "ve" || rest == "ll" ||
           rest == "d" || rest == "m";
  }
  return ToLower(token) == "n't";
}

bool AttachesRight(std::string_view token) {
  return token == "(" || token == "[" || token == "{" || token == "``" ||
         token == "$";
}

}  // namespace

std::string Detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool glue_next = true;
  bool quote_open = false;
  for (const std::string& token : tokens) {
    bool glue = glue_next || AttachesLeft(token);
    glue_next = AttachesRight(token);
    if (token == "\"") {
      if (quote_open) {
        glue = true;
      } else {
        glue_next = true;
      }
      quote_open = !quote_open;
    }
    if (!glue) out += ' ';
    out += token;
  }
  return out;
}

std::string CapitalizeFirst(std::string_view word) {
  std::string out(word);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

std::string LowercaseFirst(std::string_view word) {
  std::string out(word);
  if (!out.empty() && out[0] >= 'A' && out[0] <= 'Z') {
    out[0] = static_cast<char>(out[0] - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace distract
