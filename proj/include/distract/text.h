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

#ifndef DISTRACT_TEXT_H_
#define DISTRACT_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distract {

// Joins tokens with single spaces, then attaches closing punctuation and
// clitics ("'s", "n't", ...) to the preceding token and opening brackets to
// the following one. Straight double quotes alternate open/close.
std::string Detokenize(std::span<const std::string> tokens);

std::string CapitalizeFirst(std::string_view word);
std::string LowercaseFirst(std::string_view word);

// Whitespace split; the inverse of Detokenize only for plain word tokens.
std::vector<std::string> SplitWhitespace(std::string_view text);

}  // namespace distract

#endif  // DISTRACT_TEXT_H_
