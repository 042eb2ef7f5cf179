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

#include "distract/metrics.h"

#include "distract/rng.h"

namespace distract {

namespace {

int Index(NliLabel label) { return static_cast<int>(label); }

void RequireNonEmpty(const ConfusionCounts& confusion) {
  if (confusion.total() == 0) {
    throw MetricsError(MetricsError::Kind::kEmptyInput, "no items to score");
  }
}

}  // namespace

ConfusionCounts ConfusionCounts::FromLabels(
    std::span<const NliLabel> gold, std::span<const NliLabel> predicted) {
  if (gold.size() != predicted.size()) {
    throw MetricsError(MetricsError::Kind::kLengthMismatch,
                       "gold has " + std::to_string(gold.size()) +
                           " labels, predictions have " +
                           std::to_string(predicted.size()));
  }
  ConfusionCounts out;
  for (std::size_t i = 0; i < gold.size(); ++i) out.Add(gold[i], predicted[i]);
  return out;
}

void ConfusionCounts::Add(NliLabel gold, NliLabel predicted, std::uint64_t n) {
  counts[Index(gold)][Index(predicted)] += n;
}

std::uint64_t ConfusionCounts::at(NliLabel gold, NliLabel predicted) const {
  return counts[Index(gold)][Index(predicted)];
}

std::uint64_t ConfusionCounts::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) sum += c;
  }
  return sum;
}

std::uint64_t ConfusionCounts::gold_total(NliLabel label) const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts[Index(label)]) sum += c;
  return sum;
}

std::uint64_t ConfusionCounts::predicted_total(NliLabel label) const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) sum += row[Index(label)];
  return sum;
}

double Accuracy(const ConfusionCounts& confusion) {
  RequireNonEmpty(confusion);
  std::uint64_t diagonal = 0;
  for (int i = 0; i < 3; ++i) diagonal += confusion.counts[i][i];
  return static_cast<double>(diagonal) /
         static_cast<double>(confusion.total());
}

double CohenKappa(const ConfusionCounts& confusion) {
  RequireNonEmpty(confusion);
  const double total = static_cast<double>(confusion.total());
  const double observed = Accuracy(confusion);
  double expected = 0.0;
  for (NliLabel label : kAllLabels) {
    expected += (static_cast<double>(confusion.gold_total(label)) / total) *
                (static_cast<double>(confusion.predicted_total(label)) / total);
  }
  if (expected == 1.0) return 0.0;
  return (observed - expected) / (1.0 - expected);
}

ClassWeights ComputeClassWeights(const std::map<NliLabel, double>& counts) {
  double total = 0.0;
  for (NliLabel label : kAllLabels) {
    auto it = counts.find(label);
    if (it == counts.end() || !(it->second > 0.0)) {
      throw MetricsError(MetricsError::Kind::kZeroClassCount,
                         "class '" + std::string(LabelName(label)) +
                             "' has no examples");
    }
    total += it->second;
  }
  ClassWeights out;
  double sum = 0.0;
  for (NliLabel label : kAllLabels) {
    const double weight = total / counts.at(label);
    out.weights[Index(label)] = weight;
    sum += weight;
  }
  const double mean = sum / 3.0;
  for (double& w : out.weights) w /= mean;
  return out;
}

std::uint64_t OovBucket(std::string_view word, std::uint64_t n_buckets) {
  if (n_buckets == 0) throw std::invalid_argument("n_buckets must be positive");
  return SplitMix64(Fnv1a64(word)) % n_buckets;
}

std::vector<double> OovVector(std::uint64_t bucket, std::size_t dim,
                              std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("dim must be positive");
  Rng rng = Rng::ForKey(seed, bucket);
  std::vector<double> out(dim);
  for (double& v : out) v = rng.StandardNormal();
  return out;
}

}  // namespace distract
