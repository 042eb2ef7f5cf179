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

#include "distract/example.h"

#include "distract/skip.h"

namespace distract {

std::string_view TransformName(Transform transform) {
  switch (transform) {
    case Transform::kOriginal:
      return "original";
    case Transform::kPassive:
      return "passive";
    case Transform::kPassiveReversal:
      return "passive_reversal";
    case Transform::kPersonReversal:
      return "person_reversal";
    case Transform::kBirthday:
      return "birthday";
  }
  return "original";
}

std::optional<Transform> ParseTransform(std::string_view name) {
  for (Transform t : {Transform::kOriginal, Transform::kPassive,
                      Transform::kPassiveReversal, Transform::kPersonReversal,
                      Transform::kBirthday}) {
    if (TransformName(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view SkipReasonName(SkipReason reason) {
  switch (reason) {
    case SkipReason::kNoFrame:
      return "no_frame";
    case SkipReason::kMissingArg0:
      return "missing_arg0";
    case SkipReason::kMissingArg1:
      return "missing_arg1";
    case SkipReason::kWrongOrder:
      return "wrong_order";
    case SkipReason::kUnsupportedVerbGroup:
      return "unsupported_verb_group";
    case SkipReason::kNotEntailment:
      return "not_entailment";
    case SkipReason::kReciprocalVerb:
      return "filtered_reciprocal_verb";
    case SkipReason::kWithPreposition:
      return "filtered_with_preposition";
    case SkipReason::kNoTwoPersons:
      return "no_two_persons";
    case SkipReason::kNoPersonEntity:
      return "no_person_entity";
    case SkipReason::kNoNeutralCandidate:
      return "no_neutral_candidate";
  }
  return "unknown";
}

}  // namespace distract
