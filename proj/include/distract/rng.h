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

#ifndef DISTRACT_RNG_H_
#define DISTRACT_RNG_H_

// Portable seeded random streams.
//
// Every stream is a std::mt19937_64 (whose output sequence is fixed by the
// C++ standard) seeded with
//
//   SplitMix64(SplitMix64(seed) ^ key)
//
// where `key` is a 64-bit stream identifier, or Fnv1a64(bytes) for string
// keys such as example ids. Bounded integers use rejection sampling and
// normals use Box-Muller, so no standard-library distribution (whose output
// varies between implementations) is involved.

#include <cstdint>
#include <random>
#include <string_view>

namespace distract {

// FNV-1a, 64-bit: offset basis 0xcbf29ce484222325, prime 0x100000001b3.
std::uint64_t Fnv1a64(std::string_view bytes);

// One SplitMix64 output for state `x`: finalizer(x + 0x9e3779b97f4a7c15).
std::uint64_t SplitMix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng ForKey(std::uint64_t seed, std::uint64_t key);
  static Rng ForKey(std::uint64_t seed, std::string_view key);

  std::uint64_t Next() { return engine_(); }
  // Uniform over [0, n); n must be positive.
  std::uint64_t UniformBelow(std::uint64_t n);
  // Uniform over the closed interval [lo, hi].
  int UniformInt(int lo, int hi);
  // Uniform over [0, 1) with 53 random bits.
  double Uniform01();
  double StandardNormal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace distract

#endif  // DISTRACT_RNG_H_
