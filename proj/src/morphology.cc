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

#include "distract/morphology.h"

#include <algorithm>
#include <array>

namespace distract {

namespace {

constexpr std::array<std::string_view, 25> kKnownDoubling = {
    "abhor",  "acquit", "admit",  "commit",   "compel",   "confer", "control",
    "defer",  "deter",  "equip",  "excel",    "expel",    "infer",  "occur",
    "omit",   "patrol", "permit", "prefer",   "propel",   "rebel",  "refer",
    "regret", "submit", "transfer", "transmit"};

// Final consonants that double before -ed in stressed CVC endings.
constexpr std::string_view kDoublingConsonants = "bdglmnprtvz";

bool IsVowelLetter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Vowel flags per letter: "u" after "q" is a consonant, "y" is a vowel
// unless word-initial or following a vowel.
std::vector<bool> VowelMask(std::string_view word) {
  std::vector<bool> mask(word.size(), false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c == 'u' && i > 0 && word[i - 1] == 'q') continue;
    if (c == 'y') {
      mask[i] = i > 0 && !mask[i - 1];
      continue;
    }
    mask[i] = IsVowelLetter(c);
  }
  return mask;
}

int SyllableCount(const std::vector<bool>& mask) {
  int groups = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] && (i == 0 || !mask[i - 1])) ++groups;
  }
  return groups;
}

bool DoublesFinalConsonant(std::string_view lemma) {
  if (std::find(kKnownDoubling.begin(), kKnownDoubling.end(), lemma) !=
      kKnownDoubling.end()) {
    return true;
  }
  const std::size_t n = lemma.size();
  if (n < 3) return false;
  if (kDoublingConsonants.find(lemma[n - 1]) == std::string_view::npos) {
    return false;
  }
  const std::vector<bool> mask = VowelMask(lemma);
  return SyllableCount(mask) == 1 && !mask[n - 1] && mask[n - 2] &&
         !mask[n - 3];
}

bool IsBeForm(const TokenAnno& token) {
  static constexpr std::array<std::string_view, 8> kForms = {
      "be", "is", "am", "are", "was", "were", "'re", "'m"};
  const std::string lemma = ToLower(token.lemma);
  if (lemma == "be") return true;
  const std::string text = ToLower(token.text);
  return std::find(kForms.begin(), kForms.end(), text) != kForms.end();
}

bool IsHaveForm(const TokenAnno& token) {
  static constexpr std::array<std::string_view, 4> kForms = {"has", "have",
                                                             "had", "'ve"};
  const std::string lemma = ToLower(token.lemma);
  if (lemma == "have") return true;
  const std::string text = ToLower(token.text);
  return std::find(kForms.begin(), kForms.end(), text) != kForms.end();
}

bool IsNegation(const TokenAnno& token) {
  const std::string text = ToLower(token.text);
  return token.dep_label == "neg" || text == "not" || text == "n't" ||
         text == "never";
}

bool IsAuxiliaryLabel(std::string_view label) {
  return label == "aux" || label == "auxpass" || label == "aux:pass" ||
         label == "neg";
}

// Present/past reading of a finite auxiliary, or nullopt if neither.
std::optional<Tense> FiniteTense(const TokenAnno& token) {
  if (token.pos == "VBZ" || token.pos == "VBP") return Tense::kPresent;
  if (token.pos == "VBD") return Tense::kPast;
  const std::string text = ToLower(token.text);
  if (text == "is" || text == "am" || text == "are" || text == "'re" ||
      text == "'m" || text == "has" || text == "have" || text == "'ve" ||
      text == "'s") {
    return Tense::kPresent;
  }
  if (text == "was" || text == "were" || text == "had" || text == "'d") {
    return Tense::kPast;
  }
  return std::nullopt;
}

std::string_view BeForm(Tense tense, GrammaticalNumber number) {
  const bool plural = number == GrammaticalNumber::kPlural;
  if (tense == Tense::kPast) return plural ? "were" : "was";
  return plural ? "are" : "is";
}

}  // namespace

std::string PastParticiple(std::string_view lemma,
                           const IrregularVerbs& irregulars) {
  std::string form = ToLower(lemma);
  if (std::optional<std::string> irregular = irregulars.Lookup(form)) {
    return *irregular;
  }
  if (form.empty()) return "ed";
  const std::size_t n = form.size();
  if (form.back() == 'e') return form + "d";
  if (form.back() == 'y' && n >= 2 && !IsVowelLetter(form[n - 2])) {
    form.pop_back();
    return form + "ied";
  }
  if (DoublesFinalConsonant(form)) return form + form.back() + "ed";
  return form + "ed";
}

Expected<VerbGroupAnalysis> AnalyzeVerbGroup(const SentenceAnno& sentence,
                                             int root) {
  constexpr SkipReason kUnsupported = SkipReason::kUnsupportedVerbGroup;
  const TokenAnno& verb = sentence.tokens[root];
  if (verb.pos.rfind("VB", 0) != 0) return kUnsupported;

  // Contiguous auxiliaries (and negators) immediately left of the root.
  int first = root;
  while (first > 0) {
    const TokenAnno& prev = sentence.tokens[first - 1];
    if (prev.dep_head != root) break;
    if (!IsAuxiliaryLabel(prev.dep_label) && prev.pos != "MD" &&
        !IsNegation(prev)) {
      break;
    }
    --first;
  }
  const Span group{first, root + 1};

  for (int i = 0; i < sentence.size(); ++i) {
    const TokenAnno& token = sentence.tokens[i];
    if (token.dep_head != root) continue;
    if (token.dep_label == "auxpass" || token.dep_label == "aux:pass") {
      return kUnsupported;
    }
    if (IsNegation(token)) return kUnsupported;
    if (IsAuxiliaryLabel(token.dep_label) && !group.contains(i)) {
      return kUnsupported;
    }
  }

  VerbGroupAnalysis analysis;
  analysis.lemma = ToLower(verb.lemma.empty() ? verb.text : verb.lemma);
  analysis.group_span = group;

  const int aux_count = root - first;
  if (aux_count == 0) {
    if (verb.pos == "VBZ" || verb.pos == "VBP") {
      analysis.tense = Tense::kPresent;
    } else if (verb.pos == "VBD") {
      analysis.tense = Tense::kPast;
    } else {
      return kUnsupported;
    }
    analysis.aspect = Aspect::kSimple;
    return analysis;
  }
  if (aux_count != 1) return kUnsupported;

  const TokenAnno& aux = sentence.tokens[first];
  if (aux.pos == "MD") {
    if (verb.pos != "VB") return kUnsupported;
    analysis.tense = Tense::kModalInfinitive;
    analysis.aspect = Aspect::kSimple;
    analysis.modal = aux.text;
    return analysis;
  }
  const std::optional<Tense> tense = FiniteTense(aux);
  if (!tense) return kUnsupported;
  if (IsBeForm(aux) && verb.pos == "VBG") {
    analysis.tense = *tense;
    analysis.aspect = Aspect::kProgressive;
    return analysis;
  }
  if (IsHaveForm(aux) && verb.pos == "VBN") {
    analysis.tense = *tense;
    analysis.aspect = Aspect::kPerfect;
    return analysis;
  }
  return kUnsupported;
}

std::vector<std::string> PassiveVerbGroup(const VerbGroupAnalysis& analysis,
                                          GrammaticalNumber number,
                                          const IrregularVerbs& irregulars) {
  const std::string participle = PastParticiple(analysis.lemma, irregulars);
  const bool plural = number == GrammaticalNumber::kPlural;
  if (analysis.tense == Tense::kModalInfinitive) {
    return {analysis.modal.value_or("will"), "be", participle};
  }
  switch (analysis.aspect) {
    case Aspect::kSimple:
      return {std::string(BeForm(analysis.tense, number)), participle};
    case Aspect::kProgressive:
      return {std::string(BeForm(analysis.tense, number)), "being",
              participle};
    case Aspect::kPerfect:
      if (analysis.tense == Tense::kPast) return {"had", "been", participle};
      return {plural ? "have" : "has", "been", participle};
  }
  return {participle};
}

GrammaticalNumber NounNumber(const SentenceAnno& sentence, Span span) {
  const std::optional<int> head = SpanHead(sentence, span);
  if (!head) {
    throw MorphologyError("span [" + std::to_string(span.start) + ", " +
                          std::to_string(span.end) + ") has no head token");
  }
  const TokenAnno& token = sentence.tokens[*head];
  if (token.pos == "NNS" || token.pos == "NNPS") {
    return GrammaticalNumber::kPlural;
  }
  static constexpr std::array<std::string_view, 5> kPluralPronouns = {
      "they", "them", "we", "us", "you"};
  for (const std::string& form : {ToLower(token.text), ToLower(token.lemma)}) {
    if (std::find(kPluralPronouns.begin(), kPluralPronouns.end(), form) !=
        kPluralPronouns.end()) {
      return GrammaticalNumber::kPlural;
    }
  }
  return GrammaticalNumber::kSingular;
}

}  // namespace distract
