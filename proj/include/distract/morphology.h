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

#ifndef DISTRACT_MORPHOLOGY_H_
#define DISTRACT_MORPHOLOGY_H_

// English verb morphology for active-to-passive rewriting.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distract/annotation.h"
#include "distract/lexicon.h"
#include "distract/skip.h"

namespace distract {

enum class Tense { kPresent, kPast, kModalInfinitive };
enum class Aspect { kSimple, kProgressive, kPerfect };
enum class GrammaticalNumber { kSingular, kPlural };

// Tense/aspect decomposition of a root verb and its auxiliary chain.
// `modal` is set iff tense == kModalInfinitive.
struct VerbGroupAnalysis {
  std::string lemma;
  Tense tense = Tense::kPresent;
  Aspect aspect = Aspect::kSimple;
  std::optional<std::string> modal;
  Span group_span;

  friend bool operator==(const VerbGroupAnalysis&,
                         const VerbGroupAnalysis&) = default;
};

class MorphologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Past participle of a lowercase lemma: irregular table first, then the
// regular suffix rules (-d after e, -ied after consonant+y, consonant
// doubling for stressed CVC endings, else -ed).
std::string PastParticiple(
    std::string_view lemma,
    const IrregularVerbs& irregulars = IrregularVerbs::Builtin());

// Recognizes the seven active verb-group shapes we can passivize:
//   VBZ/VBP          present simple
//   VBD              past simple
//   be + VBG         progressive (tense of the "be" form)
//   has/have + VBN   present perfect
//   had + VBN        past perfect
//   MD + VB          modal infinitive
// Anything else (already passive, negated, do-support, interrupted or
// longer chains, non-verb roots) yields kUnsupportedVerbGroup.
Expected<VerbGroupAnalysis> AnalyzeVerbGroup(const SentenceAnno& sentence,
                                             int root);

// The passive verb group for `analysis`, with the finite "be"/"have" form
// agreeing with `number`. Always ends with the past participle.
std::vector<std::string> PassiveVerbGroup(
    const VerbGroupAnalysis& analysis, GrammaticalNumber number,
    const IrregularVerbs& irregulars = IrregularVerbs::Builtin());

// Number of the noun phrase covering `span`, judged from its head token.
// Throws MorphologyError when no token's head leaves the span.
GrammaticalNumber NounNumber(const SentenceAnno& sentence, Span span);

}  // namespace distract

#endif  // DISTRACT_MORPHOLOGY_H_
