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

#ifndef DISTRACT_SKIP_H_
#define DISTRACT_SKIP_H_

#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>

namespace distract {

// Why a source pair produced no generated example. Skips are ordinary
// outcomes (most corpus pairs are not eligible) and are counted, not thrown.
enum class SkipReason {
  kNoFrame,
  kMissingArg0,
  kMissingArg1,
  kWrongOrder,
  kUnsupportedVerbGroup,
  kNotEntailment,
  kReciprocalVerb,
  kWithPreposition,
  kNoTwoPersons,
  kNoPersonEntity,
  kNoNeutralCandidate,
};

// Stable snake_case name used in stats files.
std::string_view SkipReasonName(SkipReason reason);

// A value or the reason it could not be produced.
template <typename T>
class Expected {
 public:
  Expected(T value) : state_(std::move(value)) {}  // NOLINT
  Expected(SkipReason reason) : state_(reason) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Expected::value() on a skip");
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Expected::value() on a skip");
    return std::get<T>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  SkipReason skip() const {
    if (ok()) throw std::logic_error("Expected::skip() on a value");
    return std::get<SkipReason>(state_);
  }

 private:
  std::variant<T, SkipReason> state_;
};

}  // namespace distract

#endif  // DISTRACT_SKIP_H_
