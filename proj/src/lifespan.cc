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
#include <vector>

#include "distract/person_reversal.h"
#include "distract/text.h"

namespace distract {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

int FieldValue(const Date& date, DateField field) {
  return field == DateField::kYear ? date.year : date.month;
}

std::string FieldText(int value, DateField field) {
  return field == DateField::kYear ? std::to_string(value)
                                   : std::string(MonthName(value));
}

nlohmann::ordered_json DateJson(const Date& date) {
  return {{"year", date.year}, {"month", date.month}, {"day", date.day}};
}

// Segment id per premise token: a leading "[ title ]" is its own segment,
// the rest splits after sentence-final punctuation.
std::vector<int> Segments(const SentenceAnno& premise) {
  std::vector<int> segment(premise.tokens.size(), 0);
  int current = 0;
  int i = 0;
  if (premise.size() > 0 && premise.tokens[0].text == "[") {
    while (i < premise.size() && premise.tokens[i].text != "]") {
      segment[i++] = current;
    }
    if (i < premise.size()) segment[i++] = current;
    ++current;
  }
  for (; i < premise.size(); ++i) {
    segment[i] = current;
    const std::string& text = premise.tokens[i].text;
    if (text == "." || text == "!" || text == "?") ++current;
  }
  return segment;
}

// Index one past the closing bracket of a leading "[ title ]", else 0.
int TitleEnd(const SentenceAnno& premise) {
  if (premise.size() == 0 || premise.tokens[0].text != "[") return 0;
  for (int i = 1; i < premise.size(); ++i) {
    if (premise.tokens[i].text == "]") return i + 1;
  }
  return 0;
}

bool SpanLess(const Span& x, const Span& y) {
  return x.start != y.start ? x.start < y.start : x.end < y.end;
}

std::vector<Span> SortedUnique(std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end(), SpanLess);
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
  return spans;
}

}  // namespace

void BirthdayConfig::Validate() const {
  if (birth_years.first > birth_years.last) {
    throw ConfigError("birth year range is empty");
  }
  if (lifespan_years.first > lifespan_years.last) {
    throw ConfigError("life span range is empty");
  }
  if (lifespan_years.first < 1 || lifespan_years.last > 110) {
    throw ConfigError("life spans must lie within [1, 110] years");
  }
  if (reference_year < birth_years.first) {
    throw ConfigError("reference year precedes every birth year");
  }
}

std::string_view MonthName(int month) {
  if (month < 1 || month > 12) throw std::out_of_range("month out of range");
  return kMonths[month - 1];
}

std::string RenderDate(const Date& date, DateFormat format) {
  const std::string month(MonthName(date.month));
  if (format == DateFormat::kA) {
    return month + " " + std::to_string(date.day) + ", " +
           std::to_string(date.year);
  }
  return std::to_string(date.day) + " " + month + " " +
         std::to_string(date.year);
}

std::string RenderLifeSpan(const LifeSpan& span) {
  if (!span.death) return "(born " + RenderDate(span.birth, span.format) + ")";
  return "(" + RenderDate(span.birth, span.format) + " -- " +
         RenderDate(*span.death, span.format) + ")";
}

LifeSpan SampleLifeSpan(Rng& rng, const BirthdayConfig& config) {
  LifeSpan span;
  span.birth.year =
      rng.UniformInt(config.birth_years.first, config.birth_years.last);
  span.birth.month = rng.UniformInt(1, 12);
  span.birth.day = rng.UniformInt(1, 28);
  const int years =
      rng.UniformInt(config.lifespan_years.first, config.lifespan_years.last);
  Date death;
  death.year = span.birth.year + years;
  death.month = rng.UniformInt(1, 12);
  death.day = rng.UniformInt(1, 28);
  span.format = rng.UniformBelow(2) == 0 ? DateFormat::kA : DateFormat::kB;
  if (death.year <= config.reference_year) span.death = death;
  return span;
}

Expected<GeneratedExample> MakeBirthdayExample(const AnnotatedPair& pair,
                                               Rng& rng,
                                               const BirthdayConfig& config) {
  const SentenceAnno& premise = pair.premise;
  std::vector<Span> persons;
  std::vector<Span> entities;
  for (const EntityAnno& entity : premise.entities) {
    entities.push_back(entity.span);
    if (IsPersonKind(entity.kind)) persons.push_back(entity.span);
  }
  persons = SortedUnique(std::move(persons));
  entities = SortedUnique(std::move(entities));
  const std::vector<Span> all_persons = persons;
  if (persons.empty()) return SkipReason::kNoPersonEntity;

  // Preferred insertion sites: mentions in the body rather than the
  // "[Title]" prefix, and not followed by a possessive clitic. Other
  // mentions are used only when no preferred site exists.
  const std::vector<int> segment = Segments(premise);
  const int title_end = TitleEnd(premise);
  std::vector<Span> preferred;
  for (const Span& span : persons) {
    const bool possessive =
        span.end < premise.size() && (premise.tokens[span.end].text == "'s" ||
                                      premise.tokens[span.end].text == "'");
    if (span.start >= title_end && !possessive) preferred.push_back(span);
  }
  if (!preferred.empty()) persons = std::move(preferred);

  const Span person = persons[rng.UniformBelow(persons.size())];
  const LifeSpan life = SampleLifeSpan(rng, config);
  const NliLabel label = kAllLabels[rng.UniformBelow(3)];
  const bool death_drawn = rng.UniformBelow(2) == 1;
  const LifeEvent event =
      death_drawn && life.death ? LifeEvent::kDeath : LifeEvent::kBirth;
  const DateField field =
      rng.UniformBelow(2) == 0 ? DateField::kYear : DateField::kMonth;

  const Date& true_date =
      event == LifeEvent::kBirth ? life.birth : *life.death;
  const int true_value = FieldValue(true_date, field);
  const std::string person_name = Detokenize(premise.texts(person));

  int stated_value = true_value;
  std::string subject = person_name;
  nlohmann::ordered_json meta;
  meta["person"] = person_name;
  meta["birth"] = DateJson(life.birth);
  meta["death"] = life.death ? DateJson(*life.death) : nullptr;
  meta["format"] = life.format == DateFormat::kA ? "A" : "B";
  meta["queried_event"] = event == LifeEvent::kBirth ? "birth" : "death";
  meta["queried_field"] = field == DateField::kYear ? "year" : "month";

  if (label == NliLabel::kContradiction) {
    const bool try_reverse = rng.UniformBelow(2) == 0;
    bool reversed = false;
    if (try_reverse && life.death) {
      const Date& other = event == LifeEvent::kBirth ? *life.death : life.birth;
      if (FieldValue(other, field) != true_value) {
        stated_value = FieldValue(other, field);
        reversed = true;
      }
    }
    if (!reversed) {
      const int lo = field == DateField::kYear ? config.birth_years.first : 1;
      const int hi =
          field == DateField::kYear
              ? std::max(config.birth_years.last + config.lifespan_years.last,
                         config.reference_year)
              : 12;
      do {
        stated_value = rng.UniformInt(lo, hi);
      } while (stated_value == true_value);
    }
    meta["contradiction"] = reversed ? "reversed" : "redrawn";
  } else if (label == NliLabel::kNeutral) {
    // Tiers: same sentence before elsewhere, people before other entities.
    const std::vector<std::string> person_tokens = premise.texts(person);
    std::array<std::vector<Span>, 4> tiers;
    for (const Span& entity : entities) {
      if (entity.overlaps(person)) continue;
      if (premise.texts(entity) == person_tokens) continue;
      const bool same = segment[entity.start] == segment[person.start];
      const bool is_person = std::binary_search(
          all_persons.begin(), all_persons.end(), entity, SpanLess);
      tiers[(same ? 0 : 2) + (is_person ? 0 : 1)].push_back(entity);
    }
    const std::vector<Span>* chosen = nullptr;
    for (const std::vector<Span>& tier : tiers) {
      if (!tier.empty()) {
        chosen = &tier;
        break;
      }
    }
    if (chosen == nullptr) return SkipReason::kNoNeutralCandidate;
    const std::vector<Span>& pool = *chosen;
    subject = Detokenize(premise.texts(pool[rng.UniformBelow(pool.size())]));
  }
  meta["queried_entity"] = subject;
  meta["stated_value"] = stated_value;

  std::vector<std::string> tokens = premise.texts();
  tokens.insert(tokens.begin() + person.end, RenderLifeSpan(life));

  std::string hypothesis = subject;
  hypothesis += event == LifeEvent::kBirth ? " was born in " : " died in ";
  hypothesis += FieldText(stated_value, field);

  return GeneratedExample{Detokenize(tokens), std::move(hypothesis), label,
                          Transform::kBirthday, pair.id, std::move(meta)};
}

Expected<GeneratedExample> MakeBirthdayExample(const AnnotatedPair& pair,
                                               const BirthdayConfig& config) {
  Rng rng = Rng::ForKey(config.seed, pair.id);
  return MakeBirthdayExample(pair, rng, config);
}

}  // namespace distract
