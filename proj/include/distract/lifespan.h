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

#ifndef DISTRACT_LIFESPAN_H_
#define DISTRACT_LIFESPAN_H_

// Birthday distractions: a synthetic life span is inserted after a person
// in the premise and the hypothesis states a birth or death year or month.
//
//   premise    "... portrayed by Emilia Clarke (April 25, 860 -- November 9, 920),"
//   hypothesis "Emilia Clarke died in April"                    contradiction
//
// Labels are drawn uniformly. Entailments state the inserted value;
// contradictions either swap birth and death or state a different value;
// neutrals ask about another named entity of the premise.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "distract/annotation.h"
#include "distract/example.h"
#include "distract/rng.h"
#include "distract/skip.h"

namespace distract {

struct Date {
  int year = 0;
  int month = 1;  // 1-12
  int day = 1;    // 1-28

  friend auto operator<=>(const Date&, const Date&) = default;
};

// A: "April 25, 860"    B: "25 April 860"
enum class DateFormat { kA, kB };

struct LifeSpan {
  Date birth;
  std::optional<Date> death;  // absent when the sampled death is in the future
  DateFormat format = DateFormat::kA;

  friend bool operator==(const LifeSpan&, const LifeSpan&) = default;
};

struct YearRange {
  int first = 0;
  int last = 0;  // inclusive
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BirthdayConfig {
  std::uint64_t seed = 0;
  int reference_year = 2018;
  YearRange birth_years{800, 2000};
  YearRange lifespan_years{20, 100};

  // Throws ConfigError for empty ranges, a reference year before the first
  // birth year, or life spans outside [1, 110] years.
  void Validate() const;
};

enum class LifeEvent { kBirth, kDeath };
enum class DateField { kYear, kMonth };

std::string_view MonthName(int month);
std::string RenderDate(const Date& date, DateFormat format);
// "(April 25, 860 -- November 9, 920)" or "(born April 25, 860)".
std::string RenderLifeSpan(const LifeSpan& span);

// Draws, in order: birth year, birth month, birth day, life span length,
// death month, death day, format. The count is fixed so later draws from
// the same stream do not depend on the outcome.
LifeSpan SampleLifeSpan(Rng& rng, const BirthdayConfig& config);

Expected<GeneratedExample> MakeBirthdayExample(const AnnotatedPair& pair,
                                               Rng& rng,
                                               const BirthdayConfig& config);

// Uses the per-example stream Rng::ForKey(config.seed, pair.id).
Expected<GeneratedExample> MakeBirthdayExample(const AnnotatedPair& pair,
                                               const BirthdayConfig& config);

}  // namespace distract

#endif  // DISTRACT_LIFESPAN_H_
