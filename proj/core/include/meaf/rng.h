// Copyright 2026 The MEAF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEAF_RNG_H_
#define MEAF_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace meaf {

// Seeded random source with a fixed output sequence on every platform. The
// engine is std::mt19937_64, whose sequence the C++ standard pins down; the
// standard library distributions are not pinned, so the ones used by the
// generators are implemented here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) by rejection; n must be positive.
  uint64_t UniformInt(uint64_t n);

  // Index i with probability weights[i] / sum(weights). Entries must be
  // non-negative with a positive sum.
  std::size_t WeightedIndex(std::span<const double> weights);

  // Fisher-Yates with UniformInt.
  template <typename T>
  void Shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(UniformInt(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace meaf

#endif  // MEAF_RNG_H_
