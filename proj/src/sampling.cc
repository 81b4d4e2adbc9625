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

#include "connoter/sampling.h"

namespace connoter {

size_t Resampler::UniformIndex(size_t n) {
  const uint64_t bound = n;
  // Values below |threshold| would bias the modulo; 2^64 mod n == (-n) mod n.
  const uint64_t threshold = (0 - bound) % bound;
  uint64_t r;
  do {
    r = engine_();
  } while (r < threshold);
  return static_cast<size_t>(r % bound);
}

std::vector<size_t> Resampler::DrawWithReplacement(size_t n) {
  std::vector<size_t> out(n);
  for (size_t &index : out) index = UniformIndex(n);
  return out;
}

}  // namespace connoter
