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

#include "distract/passivizer.h"

#include "distract/text.h"

namespace distract {

namespace {

bool IsPrepositionalLink(std::string_view label) {
  return label == "prep" || label == "pobj" || label == "pcomp" ||
         label == "obl" || label == "nmod" || label.rfind("obl:", 0) == 0 ||
         label.rfind("nmod:", 0) == 0;
}

// True when the preposition at `index` hangs off `root`, either directly or
// through a chain of prepositional objects ("in the park with a friend").
bool PrepositionReachesRoot(const SentenceAnno& sentence, int root,
                            int index) {
  int current = index;
  for (int steps = 0; steps < sentence.size(); ++steps) {
    const int head = sentence.tokens[current].dep_head;
    if (head == kRootHead) return false;
    if (head == root) return true;
    current = head;
    if (!IsPrepositionalLink(sentence.tokens[current].dep_label)) return false;
  }
  return false;
}

struct Piece {
  std::string text;
  int origin;  // source token index, -1 for inserted words
};

}  // namespace

SkipReason ToSkipReason(FilterReason reason) {
  return reason == FilterReason::kReciprocalVerb
             ? SkipReason::kReciprocalVerb
             : SkipReason::kWithPreposition;
}

Expected<PassiveEligibility> PassiveEligible(const AnnotatedPair& pair) {
  const SentenceAnno& hypothesis = pair.hypothesis;
  const int root = RootIndex(hypothesis);

  std::optional<SrlFrame> frame;
  try {
    frame = FrameAt(hypothesis, root);
  } catch (const AnnotationError&) {
    // Two frames claiming the root: no single reading to rewrite.
    return SkipReason::kNoFrame;
  }
  if (!frame) return SkipReason::kNoFrame;
  const Span* agent = frame->arg("ARG0");
  if (agent == nullptr) return SkipReason::kMissingArg0;
  const Span* patient = frame->arg("ARG1");
  if (patient == nullptr) return SkipReason::kMissingArg1;

  Expected<VerbGroupAnalysis> verb_group = AnalyzeVerbGroup(hypothesis, root);
  if (!verb_group) return verb_group.skip();

  const Span group = verb_group->group_span;
  if (agent->end != group.start || patient->start != group.end) {
    return SkipReason::kWrongOrder;
  }
  return PassiveEligibility{root, *agent, *patient,
                            std::move(verb_group).value()};
}

FilterVerdict BlockedByFilters(const SentenceAnno& sentence, int root,
                               const Lexicons& lexicons) {
  const TokenAnno& verb = sentence.tokens[root];
  const std::string lemma = verb.lemma.empty() ? verb.text : verb.lemma;
  if (lexicons.reciprocal_verbs->contains(lemma)) {
    return {true, FilterReason::kReciprocalVerb};
  }
  for (int i = 0; i < sentence.size(); ++i) {
    const TokenAnno& token = sentence.tokens[i];
    if (ToLower(token.text) != "with") continue;
    if (token.dep_label != "prep" && token.dep_label != "case") continue;
    if (PrepositionReachesRoot(sentence, root, i)) {
      return {true, FilterReason::kWithPreposition};
    }
  }
  return {};
}

std::vector<std::string> PassiveTokens(const SentenceAnno& hypothesis,
                                       const PassiveEligibility& eligibility,
                                       bool reversed,
                                       const Lexicons& lexicons) {
  const Span subject = reversed ? eligibility.agent : eligibility.patient;
  const Span by_object = reversed ? eligibility.patient : eligibility.agent;
  const GrammaticalNumber number = NounNumber(hypothesis, subject);

  std::vector<Piece> pieces;
  auto append_span = [&](int start, int end) {
    for (int i = start; i < end; ++i) {
      pieces.push_back({hypothesis.tokens[i].text, i});
    }
  };
  append_span(0, eligibility.agent.start);
  append_span(subject.start, subject.end);
  for (std::string& word :
       PassiveVerbGroup(eligibility.verb_group, number,
                        *lexicons.irregulars)) {
    pieces.push_back({std::move(word), -1});
  }
  pieces.push_back({"by", -1});
  append_span(by_object.start, by_object.end);
  append_span(eligibility.patient.end, hypothesis.size());

  if (!pieces.empty() && pieces.front().origin != 0) {
    pieces.front().text = CapitalizeFirst(pieces.front().text);
    for (Piece& piece : pieces) {
      if (piece.origin != 0) continue;
      const TokenAnno& first = hypothesis.tokens[0];
      if (first.pos != "NNP" && first.pos != "NNPS" && first.text != "I") {
        piece.text = LowercaseFirst(piece.text);
      }
    }
  }

  std::vector<std::string> out;
  out.reserve(pieces.size());
  for (Piece& piece : pieces) out.push_back(std::move(piece.text));
  return out;
}

Expected<GeneratedExample> ToPassive(const AnnotatedPair& pair,
                                     const Lexicons& lexicons) {
  Expected<PassiveEligibility> eligibility = PassiveEligible(pair);
  if (!eligibility) return eligibility.skip();
  const std::vector<std::string> tokens =
      PassiveTokens(pair.hypothesis, *eligibility, false, lexicons);
  const std::vector<std::string> premise = pair.premise.texts();
  return GeneratedExample{Detokenize(premise), Detokenize(tokens), pair.label,
                          Transform::kPassive, pair.id, nullptr};
}

Expected<GeneratedExample> ToPassiveReversal(const AnnotatedPair& pair,
                                             const Lexicons& lexicons) {
  if (pair.label != NliLabel::kEntailment) return SkipReason::kNotEntailment;
  Expected<PassiveEligibility> eligibility = PassiveEligible(pair);
  if (!eligibility) return eligibility.skip();
  const FilterVerdict verdict =
      BlockedByFilters(pair.hypothesis, eligibility->root, lexicons);
  if (verdict.blocked) return ToSkipReason(*verdict.reason);
  const std::vector<std::string> tokens =
      PassiveTokens(pair.hypothesis, *eligibility, true, lexicons);
  const std::vector<std::string> premise = pair.premise.texts();
  return GeneratedExample{Detokenize(premise), Detokenize(tokens),
                          NliLabel::kContradiction,
                          Transform::kPassiveReversal, pair.id, nullptr};
}

}  // namespace distract
