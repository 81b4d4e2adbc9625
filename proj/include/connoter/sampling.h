// Copyright 2026 The Connoter Authors.
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

#ifndef CONNOTER_SAMPLING_H_
#define CONNOTER_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace connoter {

// Seeded document resampler. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; bounded draws use rejection
// sampling on the raw 64-bit output instead of std::uniform_int_distribution
// (whose algorithm is implementation-defined), so draws are identical on every
// platform and standard library.
class Resampler {
 public:
  explicit Resampler(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). |n| must be positive.
  size_t UniformIndex(size_t n);

  // |n| indices in [0, n), drawn with replacement.
  std::vector<size_t> DrawWithReplacement(size_t n);

 private:
  std::mt19937_64 engine_;
};

// Seed for bootstrap sample |index|; samples are independent streams so they
// can be drawn in any order or concurrently.
inline uint64_t SampleSeed(uint64_t seed, size_t index) { return seed + index; }

}  // namespace connoter

#endif  // CONNOTER_SAMPLING_H_
