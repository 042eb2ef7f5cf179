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

#ifndef DISTRACT_PERSON_REVERSAL_H_
#define DISTRACT_PERSON_REVERSAL_H_

// FEVER-derived NLI pairs and person-name reversal.
//
// Retrieved evidence sentences are labeled against the claim: gold evidence
// inherits the claim verdict, anything else is neutral. Premises get their
// Wikipedia page title prepended in brackets. Person reversal swaps two
// PERSON names that sit in different numbered arguments of the root verb:
//
//   "Lois Lane's name was taken from Lola Lane's name"   entailment
//   "Lola Lane's name was taken from Lois Lane's name"   contradiction

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "distract/annotation.h"
#include "distract/example.h"
#include "distract/passivizer.h"
#include "distract/skip.h"

namespace distract {

enum class ClaimLabel { kSupports, kRefutes, kNotEnoughInfo };

std::string_view ClaimLabelName(ClaimLabel label);
std::optional<ClaimLabel> ParseClaimLabel(std::string_view name);

struct FeverClaimRecord {
  long long claim_id = 0;
  std::string claim_text;
  ClaimLabel claim_label = ClaimLabel::kNotEnoughInfo;
  // (page title, sentence index); empty iff NOT ENOUGH INFO.
  std::set<std::pair<std::string, int>> gold_evidence;
};

struct RetrievedEvidence {
  long long claim_id = 0;
  std::string page_title;
  int sentence_index = 0;
  std::string sentence_text;
};

NliLabel LabelFeverPair(ClaimLabel claim_label, bool evidence_is_gold);

// "[Page Title] premise", with underscores in the title read as spaces.
std::string PrefixTitle(std::string_view page_title,
                        std::string_view premise_text);

// The two PERSON spans a reversal would exchange, earliest first.
struct PersonPair {
  Span first;
  Span second;
};

// Picks PERSON entities lying inside distinct ARG0/ARG1/ARG2 spans of the
// root frame: the first entity of the earliest role that has one, paired
// with the first entity of a later role whose text differs.
Expected<PersonPair> FindReversiblePersons(const SentenceAnno& hypothesis);

// Exchanges the token ranges `a` and `b` (non-overlapping) and remaps heads,
// labels, frames and entities so the result is a valid sentence in which
// each range's content plays the other's syntactic role. Applying it again
// to the moved ranges restores the input.
SentenceAnno ExchangeSpans(const SentenceAnno& sentence, Span a, Span b);

// Positions of `a` and `b`'s contents after ExchangeSpans(sentence, a, b).
std::pair<Span, Span> ExchangedPositions(Span a, Span b);

// The hypothesis with its two persons exchanged.
Expected<SentenceAnno> ReversePersonsSentence(const AnnotatedPair& pair,
                                              const Lexicons& lexicons = {});

Expected<GeneratedExample> ReversePersons(const AnnotatedPair& pair,
                                          const Lexicons& lexicons = {});

bool IsPersonKind(std::string_view kind);

}  // namespace distract

#endif  // DISTRACT_PERSON_REVERSAL_H_
