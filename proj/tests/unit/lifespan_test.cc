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

#include "distract/lifespan.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "support/test_support.h"

namespace distract {
namespace {

// Death is absent iff birth + span > 2018 with birth uniform on [800, 2000]
// and span uniform on [20, 100]: 3402 of 1201 * 81 equally likely pairs.
constexpr double kDeathAbsentProbability = 0.034970857618651124;

AnnotatedPair Fixture(const std::string& id) {
  return testing::FixturePair("fever_annotated.jsonl", id);
}

TEST_CASE("render goldens") {
  LifeSpan span{{860, 4, 25}, Date{920, 11, 9}, DateFormat::kA};
  CHECK(RenderLifeSpan(span) == "(April 25, 860 -- November 9, 920)");
  span.format = DateFormat::kB;
  CHECK(RenderLifeSpan(span) == "(25 April 860 -- 9 November 920)");
  LifeSpan born{{1990, 1, 5}, std::nullopt, DateFormat::kA};
  CHECK(RenderLifeSpan(born) == "(born January 5, 1990)");
  born.format = DateFormat::kB;
  CHECK(RenderLifeSpan(born) == "(born 5 January 1990)");
  CHECK(RenderDate({2001, 12, 28}, DateFormat::kA) == "December 28, 2001");
  CHECK(MonthName(9) == "September");
}

TEST_CASE("config validation") {
  BirthdayConfig ok;
  CHECK_NOTHROW(ok.Validate());
  BirthdayConfig c = ok;
  c.birth_years = {1900, 1800};
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = ok;
  c.lifespan_years = {50, 40};
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = ok;
  c.lifespan_years = {20, 111};
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = ok;
  c.lifespan_years = {0, 10};
  CHECK_THROWS_AS(c.Validate(), ConfigError);
  c = ok;
  c.reference_year = 700;
  CHECK_THROWS_AS(c.Validate(), ConfigError);
}

TEST_CASE("forced future death is absent") {
  BirthdayConfig c;
  c.birth_years = {2000, 2000};
  c.lifespan_years = {20, 100};
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    LifeSpan span = SampleLifeSpan(rng, c);
    CHECK(span.birth.year == 2000);
    CHECK_FALSE(span.death.has_value());
  }
}

TEST_CASE("sampling is deterministic per seed") {
  BirthdayConfig c;
  Rng a = Rng::ForKey(7, "pair-1");
  Rng b = Rng::ForKey(7, "pair-1");
  for (int i = 0; i < 50; ++i) CHECK(SampleLifeSpan(a, c) == SampleLifeSpan(b, c));
}

TEST_CASE("sample distribution over 9,999 draws") {
  BirthdayConfig c;
  Rng rng(20180101);
  constexpr int kN = 9999;
  int absent = 0;
  int min_year = 1 << 30;
  int max_year = -(1 << 30);
  std::set<int> months, days;
  int format_a = 0;
  for (int i = 0; i < kN; ++i) {
    LifeSpan s = SampleLifeSpan(rng, c);
    REQUIRE(s.birth.year >= 800);
    REQUIRE(s.birth.year <= 2000);
    min_year = std::min(min_year, s.birth.year);
    max_year = std::max(max_year, s.birth.year);
    months.insert(s.birth.month);
    days.insert(s.birth.day);
    if (s.format == DateFormat::kA) ++format_a;
    if (!s.death) {
      ++absent;
      continue;
    }
    int span = s.death->year - s.birth.year;
    CHECK(span >= 20);
    CHECK(span <= 100);
    CHECK(s.death->year <= 2018);
    CHECK(s.birth < *s.death);
    CHECK(s.death->month >= 1);
    CHECK(s.death->month <= 12);
    CHECK(s.death->day >= 1);
    CHECK(s.death->day <= 28);
  }
  CHECK(min_year == 800);
  CHECK(max_year == 2000);
  CHECK(months.size() == 12);
  CHECK(*months.begin() == 1);
  CHECK(days.size() == 28);
  CHECK(*days.rbegin() == 28);
  CHECK(std::abs(static_cast<double>(absent) / kN - kDeathAbsentProbability) <=
        0.03);
  CHECK(std::abs(static_cast<double>(format_a) / kN - 0.5) <= 0.03);
}

BirthdayConfig Daenerys() {
  BirthdayConfig c;
  c.birth_years = {860, 860};
  c.lifespan_years = {60, 60};
  return c;
}

TEST_CASE("pinned seed reproduces the death-month contradiction") {
  BirthdayConfig c = Daenerys();
  c.seed = 22920551;
  Expected<GeneratedExample> ex = MakeBirthdayExample(Fixture("fever-daenerys"), c);
  REQUIRE(ex.ok());
  CHECK(ex->premise.find("Emilia Clarke (April 25, 860 -- November 9, 920),") !=
        std::string::npos);
  CHECK(ex->hypothesis == "Emilia Clarke died in April");
  CHECK(ex->label == NliLabel::kContradiction);
  CHECK(ex->transform == Transform::kBirthday);
  CHECK(ex->source_id == "fever-daenerys");
  CHECK(testing::CheckBirthdayExample(*ex) == "");
}

TEST_CASE("entailment template on the same fixture") {
  BirthdayConfig c = Daenerys();
  AnnotatedPair pair = Fixture("fever-daenerys");
  bool found = false;
  for (std::uint64_t seed = 0; seed < 20000 && !found; ++seed) {
    c.seed = seed;
    Expected<GeneratedExample> ex = MakeBirthdayExample(pair, c);
    if (!ex || ex->meta["person"] != "Emilia Clarke" ||
        ex->label != NliLabel::kEntailment ||
        ex->meta["queried_event"] != "birth" ||
        ex->meta["queried_field"] != "year") {
      continue;
    }
    found = true;
    CHECK(ex->hypothesis == "Emilia Clarke was born in 860");
  }
  CHECK(found);
}

TEST_CASE("generated labels are sound and skips are explained") {
  std::map<std::string, int> skips;
  std::map<NliLabel, int> labels;
  for (const AnnotatedPair& pair : testing::LoadPairs("fever_annotated.jsonl")) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      BirthdayConfig c;
      c.seed = seed;
      Expected<GeneratedExample> ex = MakeBirthdayExample(pair, c);
      if (!ex) {
        ++skips[std::string(SkipReasonName(ex.skip()))];
        continue;
      }
      ++labels[ex->label];
      CAPTURE(ex->premise);
      CAPTURE(ex->hypothesis);
      CHECK(testing::CheckBirthdayExample(*ex) == "");
      if (ex->label == NliLabel::kNeutral) {
        CHECK(ex->meta["queried_entity"] != ex->meta["person"]);
      }
    }
  }
  CHECK(labels.size() == 3);
  CHECK(skips.count("no_person_entity") == 1);
  CHECK(skips.count("no_neutral_candidate") == 1);
}

TEST_CASE("no person entity") {
  BirthdayConfig c;
  Expected<GeneratedExample> ex = MakeBirthdayExample(Fixture("fever-no-person"), c);
  CHECK(ex.skip() == SkipReason::kNoPersonEntity);
}

TEST_CASE("lone person cannot yield a neutral example") {
  AnnotatedPair pair = Fixture("fever-one-person");
  int neutral_skips = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BirthdayConfig c;
    c.seed = seed;
    Expected<GeneratedExample> ex = MakeBirthdayExample(pair, c);
    if (ex) {
      CHECK(ex->label != NliLabel::kNeutral);
    } else {
      CHECK(ex.skip() == SkipReason::kNoNeutralCandidate);
      ++neutral_skips;
    }
  }
  CHECK(neutral_skips > 0);
}

TEST_CASE("example depends only on seed and id") {
  AnnotatedPair pair = Fixture("fever-daenerys");
  BirthdayConfig c;
  c.seed = 5;
  Expected<GeneratedExample> a = MakeBirthdayExample(pair, c);
  Expected<GeneratedExample> b = MakeBirthdayExample(pair, c);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(*a == *b);
  std::set<std::string> distinct;
  for (int i = 0; i < 20; ++i) {
    pair.id = "copy-" + std::to_string(i);
    Expected<GeneratedExample> ex = MakeBirthdayExample(pair, c);
    if (ex) distinct.insert(ex->premise + ex->hypothesis);
  }
  CHECK(distinct.size() > 10);
}

}  // namespace
}  // namespace distract
