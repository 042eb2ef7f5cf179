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

#ifndef DISTRACT_PASSIVIZER_H_
#define DISTRACT_PASSIVIZER_H_

// Passive and passive-reversal hypotheses built from the root verb's SRL
// frame. Given "A woman is using a large umbrella" (entailment):
//
//   passive           "A large umbrella is being used by a woman"  (same label)
//   passive reversal  "A woman is being used by a large umbrella"  (contradiction)
//
// Reversals are only produced from entailments, and never for reciprocal
// root verbs or roots carrying a "with" prepositional phrase.

#include <optional>
#include <string>
#include <vector>

#include "distract/annotation.h"
#include "distract/example.h"
#include "distract/lexicon.h"
#include "distract/morphology.h"
#include "distract/skip.h"

namespace distract {

enum class FilterReason { kReciprocalVerb, kWithPreposition };

struct FilterVerdict {
  bool blocked = false;
  std::optional<FilterReason> reason;  // set iff blocked
};

SkipReason ToSkipReason(FilterReason reason);

// Everything the rewrite needs once a hypothesis is known to qualify.
struct PassiveEligibility {
  int root = 0;
  Span agent;    // ARG0, directly left of the verb group
  Span patient;  // ARG1, directly right of the verb group
  VerbGroupAnalysis verb_group;
};

struct Lexicons {
  const IrregularVerbs* irregulars = &IrregularVerbs::Builtin();
  const WordList* reciprocal_verbs = &WordList::BuiltinReciprocalVerbs();
};

// ok iff the hypothesis root has a frame with ARG0 and ARG1, the verb group
// is one of the supported active shapes, and the layout is exactly
// [prefix] ARG0 <verb group> ARG1 [suffix].
Expected<PassiveEligibility> PassiveEligible(const AnnotatedPair& pair);

FilterVerdict BlockedByFilters(const SentenceAnno& sentence, int root,
                               const Lexicons& lexicons = {});

// Rewritten hypothesis tokens. With `reversed` the ARG0 phrase becomes the
// surface subject and ARG1 follows "by".
std::vector<std::string> PassiveTokens(const SentenceAnno& hypothesis,
                                       const PassiveEligibility& eligibility,
                                       bool reversed,
                                       const Lexicons& lexicons = {});

Expected<GeneratedExample> ToPassive(const AnnotatedPair& pair,
                                     const Lexicons& lexicons = {});

Expected<GeneratedExample> ToPassiveReversal(const AnnotatedPair& pair,
                                             const Lexicons& lexicons = {});

}  // namespace distract

#endif  // DISTRACT_PASSIVIZER_H_
