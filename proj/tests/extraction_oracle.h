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


#ifndef CONNOTER_TESTS_EXTRACTION_ORACLE_H_
#define CONNOTER_TESTS_EXTRACTION_ORACLE_H_

#include <vector>

#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/extraction.h"
#include "connoter/lexicon.h"

namespace connoter::testing {

// Brute-force reference for ExtractTriples: every (verb, token) pair is
// tested by walking head pointers, with no child lists or memoization.
std::vector<Triple> OracleTriples(const ParsedDocument &doc, const DocumentEntities &entities,
                                  const DimensionView &view, const ExtractionOptions &options);

// Reference argument span: tokens whose head chain reaches |argument| through
// det/amod/compound/flat edges only, cut to the contiguous block around it.
TokenSpan OracleSpan(const Sentence &sentence, int argument);

}  // namespace connoter::testing

#endif  // CONNOTER_TESTS_EXTRACTION_ORACLE_H_
