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


#ifndef CONNOTER_TESTS_PROPERTIES_H_
#define CONNOTER_TESTS_PROPERTIES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "connoter/corpus.h"

namespace connoter::testing {

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when all cases pass
};

// A random single-rooted CoNLL-U document of 1 to |max_sentences| sentences
// built from a small vocabulary of verbs, names, pronouns and nouns.
ParsedDocument RandomDocument(std::mt19937_64 &rng, const std::string &doc_id,
                              int max_sentences = 3);

// Each check draws |cases| inputs from |seed|.
PropertyOutcome CheckOracleEquivalence(uint64_t seed, int cases);
PropertyOutcome CheckClusterPartition(uint64_t seed, int cases);
PropertyOutcome CheckScoreBounds(uint64_t seed, int cases);
PropertyOutcome CheckPermutationInvariance(uint64_t seed, int cases);
PropertyOutcome CheckWeightedMeanAdditivity(uint64_t seed, int cases);

}  // namespace connoter::testing

#endif  // CONNOTER_TESTS_PROPERTIES_H_
