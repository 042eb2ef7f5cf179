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

#ifndef DISTRACT_EXAMPLE_H_
#define DISTRACT_EXAMPLE_H_

#include <optional>
#include <string>
#include <string_view>

#include "distract/annotation.h"
#include "json.hpp"

namespace distract {

enum class Transform {
  kOriginal,
  kPassive,
  kPassiveReversal,
  kPersonReversal,
  kBirthday,
};

std::string_view TransformName(Transform transform);
std::optional<Transform> ParseTransform(std::string_view name);

// One output record: detokenized premise and hypothesis plus provenance.
// `meta` is null unless the transform attaches audit data.
struct GeneratedExample {
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kNeutral;
  Transform transform = Transform::kOriginal;
  std::string source_id;
  nlohmann::ordered_json meta;

  friend bool operator==(const GeneratedExample&,
                         const GeneratedExample&) = default;
};

}  // namespace distract

#endif  // DISTRACT_EXAMPLE_H_
