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

#ifndef CONNOTER_EXTRACTION_H_
#define CONNOTER_EXTRACTION_H_

#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/lexicon.h"

namespace connoter {

struct ExtractionOptions {
  // Map nsubj:pass / nsubjpass dependents to the theme role.
  bool passive_as_theme = false;
  // Require "step in"-style keys to see a compound:prt dependent "in".
  bool particle_check = true;
};

// One lexicon match of an entity in an argument position.
struct Triple {
  std::string entity;      // canonical cluster name
  std::string verb_lemma;  // DimensionView key, e.g. "trap" or "step in"
  Role role = Role::kAgent;
  double score = 0.0;      // view agent score for kAgent, theme score for kTheme
  std::string doc_id;
  int sentence = 0;        // 0-based
  int verb_index = 0;      // 1-based token index of the predicate
  int argument_index = 0;  // 1-based token index of the argument head
  // The same verb token links this entity as both agent and theme
  // ("she blamed herself").
  bool same_cluster_pair = false;

  auto SortKey() const {
    return std::tie(doc_id, sentence, verb_index, role, argument_index, entity, verb_lemma);
  }
  bool operator==(const Triple &) const = default;
};

bool TripleLess(const Triple &a, const Triple &b);

struct TokenSpan {
  int start = 0;
  int end = 0;
  bool operator==(const TokenSpan &) const = default;
};

// The argument token plus its contiguous subtree over det, amod, compound and
// flat dependents (relation subtypes included).
TokenSpan ArgumentSpan(const Sentence &sentence, int argument);

// Emits agent triples for nsubj dependents and theme triples for obj/dobj
// dependents of every VERB token whose lemma matches |view|, following conj
// chains from each argument. Output is sorted by (sentence, verb, role,
// argument).
std::vector<Triple> ExtractTriples(const ParsedDocument &doc, const DocumentEntities &entities,
                                   const DimensionView &view,
                                   const ExtractionOptions &options = {});

struct EntityVerbPair {
  std::string entity;
  std::string verb_lemma;
  Role role = Role::kAgent;
  size_t count = 0;
  bool operator==(const EntityVerbPair &) const = default;
};

// Multiset counts of (entity, lemma, role), sorted by that key.
std::vector<EntityVerbPair> EntityVerbPairs(std::span<const Triple> triples);

}  // namespace connoter

#endif  // CONNOTER_EXTRACTION_H_
