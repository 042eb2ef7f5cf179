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

#ifndef DISTRACT_METRICS_H_
#define DISTRACT_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "distract/annotation.h"

namespace distract {

class MetricsError : public std::invalid_argument {
 public:
  enum class Kind { kEmptyInput, kZeroClassCount, kLengthMismatch };

  MetricsError(Kind kind, const std::string& message)
      : std::invalid_argument(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// 3x3 counts indexed [gold][predicted] in NliLabel order.
struct ConfusionCounts {
  std::array<std::array<std::uint64_t, 3>, 3> counts{};

  static ConfusionCounts FromLabels(std::span<const NliLabel> gold,
                                    std::span<const NliLabel> predicted);

  void Add(NliLabel gold, NliLabel predicted, std::uint64_t n = 1);
  std::uint64_t at(NliLabel gold, NliLabel predicted) const;
  std::uint64_t total() const;
  std::uint64_t gold_total(NliLabel label) const;
  std::uint64_t predicted_total(NliLabel label) const;
};

// Fraction of items on the diagonal. Throws MetricsError on empty input.
double Accuracy(const ConfusionCounts& confusion);

// (p_o - p_e) / (1 - p_e) with p_e from the gold and predicted marginals;
// 0 when p_e == 1. Throws MetricsError on empty input.
double CohenKappa(const ConfusionCounts& confusion);

// Inverse-proportion class weights rescaled to mean 1.
struct ClassWeights {
  std::array<double, 3> weights{1.0, 1.0, 1.0};

  double operator[](NliLabel label) const {
    return weights[static_cast<int>(label)];
  }
};

// `counts` may be raw counts or proportions; every class needs a positive
// entry or MetricsError(kZeroClassCount) is thrown.
ClassWeights ComputeClassWeights(const std::map<NliLabel, double>& counts);

inline constexpr std::uint64_t kDefaultOovBuckets = 10000;

// SplitMix64(FNV-1a-64(utf8 bytes)) mod n_buckets. Byte-exact and frozen:
// changing it reassigns every OOV word's vector.
std::uint64_t OovBucket(std::string_view word,
                        std::uint64_t n_buckets = kDefaultOovBuckets);

// `dim` standard-normal values from the stream Rng::ForKey(seed, bucket).
std::vector<double> OovVector(std::uint64_t bucket, std::size_t dim,
                              std::uint64_t seed);

}  // namespace distract

#endif  // DISTRACT_METRICS_H_
