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

#include "distract/person_reversal.h"

#include <algorithm>
#include <set>
#include <string>

#include "distract/text.h"
#include "doctest.h"
#include "support/test_support.h"

namespace distract {
namespace {

AnnotatedPair Fixture(const std::string& id) {
  return testing::FixturePair("fever_annotated.jsonl", id);
}

TEST_CASE("claim label and gold flag truth table") {
  CHECK(LabelFeverPair(ClaimLabel::kSupports, true) == NliLabel::kEntailment);
  CHECK(LabelFeverPair(ClaimLabel::kRefutes, true) ==
        NliLabel::kContradiction);
  CHECK(LabelFeverPair(ClaimLabel::kNotEnoughInfo, true) ==
        NliLabel::kNeutral);
  CHECK(LabelFeverPair(ClaimLabel::kSupports, false) == NliLabel::kNeutral);
  CHECK(LabelFeverPair(ClaimLabel::kRefutes, false) == NliLabel::kNeutral);
  CHECK(LabelFeverPair(ClaimLabel::kNotEnoughInfo, false) ==
        NliLabel::kNeutral);
}

TEST_CASE("claim label names") {
  CHECK(ParseClaimLabel("SUPPORTS") == ClaimLabel::kSupports);
  CHECK(ParseClaimLabel("REFUTES") == ClaimLabel::kRefutes);
  CHECK(ParseClaimLabel("NOT ENOUGH INFO") == ClaimLabel::kNotEnoughInfo);
  CHECK_FALSE(ParseClaimLabel("supports").has_value());
  for (ClaimLabel l : {ClaimLabel::kSupports, ClaimLabel::kRefutes,
                       ClaimLabel::kNotEnoughInfo}) {
    CHECK(ParseClaimLabel(ClaimLabelName(l)) == l);
  }
}

TEST_CASE("title prefix") {
  CHECK(PrefixTitle("Lois_Lane", "She is a reporter.") ==
        "[Lois Lane] She is a reporter.");
  CHECK(PrefixTitle("Daenerys_Targaryen", "x") == "[Daenerys Targaryen] x");
  CHECK(PrefixTitle("Cher", "") == "[Cher] ");
  CHECK(PrefixTitle("A_(film)", "y") == "[A (film)] y");
}

TEST_CASE("person kinds") {
  CHECK(IsPersonKind("PERSON"));
  CHECK(IsPersonKind("PER"));
  CHECK_FALSE(IsPersonKind("ORG"));
  CHECK_FALSE(IsPersonKind("person_name"));
}

TEST_CASE("Lois Lane golden") {
  AnnotatedPair pair = Fixture("fever-lois");
  Expected<PersonPair> persons = FindReversiblePersons(pair.hypothesis);
  REQUIRE(persons.ok());
  CHECK(persons->first == Span{0, 2});
  CHECK(persons->second == Span{7, 9});

  Expected<GeneratedExample> out = ReversePersons(pair);
  REQUIRE(out.ok());
  CHECK(out->hypothesis == "Lola Lane's name was taken from Lois Lane's name");
  CHECK(out->premise.rfind("[Lois Lane] ", 0) == 0);
  CHECK(out->label == NliLabel::kContradiction);
  CHECK(out->transform == Transform::kPersonReversal);
  CHECK(out->source_id == "fever-lois");

  Expected<SentenceAnno> sentence = ReversePersonsSentence(pair);
  REQUIRE(sentence.ok());
  ValidateSentence(*sentence, "reversed");
  std::set<std::pair<int, int>> entity_spans;
  for (const EntityAnno& e : sentence->entities) {
    entity_spans.insert({e.span.start, e.span.end});
    CHECK(IsPersonKind(e.kind));
  }
  CHECK(entity_spans == std::set<std::pair<int, int>>{{0, 2}, {7, 9}});
}

TEST_CASE("skip reasons") {
  CHECK(ReversePersons(Fixture("fever-lois-neutral")).skip() ==
        SkipReason::kNotEntailment);
  CHECK(ReversePersons(Fixture("fever-one-person")).skip() ==
        SkipReason::kNoTwoPersons);
  CHECK(ReversePersons(Fixture("fever-met")).skip() ==
        SkipReason::kReciprocalVerb);

  AnnotatedPair no_frame = Fixture("fever-lois");
  no_frame.hypothesis.frames.clear();
  CHECK(ReversePersons(no_frame).skip() == SkipReason::kNoTwoPersons);

  // Same surface text in both roles is not a reversal.
  AnnotatedPair same = Fixture("fever-lois");
  same.hypothesis.tokens[7].text = "Lois";
  same.hypothesis.tokens[7].lemma = "Lois";
  CHECK(ReversePersons(same).skip() == SkipReason::kNoTwoPersons);
}

TEST_CASE("exchanged positions for unequal lengths") {
  auto [a, b] = ExchangedPositions({0, 1}, {4, 7});
  CHECK(a == Span{6, 7});
  CHECK(b == Span{0, 3});
  auto [c, d] = ExchangedPositions({1, 4}, {5, 6});
  CHECK(c == Span{3, 6});
  CHECK(d == Span{1, 2});
}

std::multiset<std::string> Texts(const SentenceAnno& s) {
  std::vector<std::string> t = s.texts();
  return {t.begin(), t.end()};
}

TEST_CASE("randomized exchange is an involution preserving the multiset") {
  Rng rng(99);
  int unequal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    SentenceAnno s = testing::RandomPersonSentence(rng);
    CAPTURE(Detokenize(s.texts()));
    AnnotatedPair pair =
        testing::MakePair("p" + std::to_string(trial), NliLabel::kEntailment, s);
    Expected<PersonPair> persons = FindReversiblePersons(s);
    REQUIRE(persons.ok());
    if (persons->first.size() != persons->second.size()) ++unequal;

    Expected<SentenceAnno> once = ReversePersonsSentence(pair);
    REQUIRE(once.ok());
    ValidateSentence(*once, "once");
    CHECK(Texts(*once) == Texts(s));
    CHECK(once->size() == s.size());
    CHECK(once->frames.size() == s.frames.size());
    CHECK(once->entities.size() == s.entities.size());

    auto [first, second] = ExchangedPositions(persons->first, persons->second);
    CHECK(once->texts(first) == s.texts(persons->first));
    CHECK(once->texts(second) == s.texts(persons->second));
    const SrlFrame& frame = once->frames[0];
    CHECK(frame.arg("ARG0")->start == 0);
    CHECK(frame.arg("ARG2")->end == first.end);
    for (const EntityAnno& e : once->entities) {
      CHECK((e.span == first || e.span == second));
    }

    AnnotatedPair again = pair;
    again.hypothesis = *once;
    Expected<SentenceAnno> twice = ReversePersonsSentence(again);
    REQUIRE(twice.ok());
    CHECK(*twice == s);
  }
  CHECK(unequal > 50);
}

}  // namespace
}  // namespace distract
