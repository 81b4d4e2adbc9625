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

#ifndef CONNOTER_SCORING_H_
#define CONNOTER_SCORING_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "connoter/corpus.h"
#include "connoter/extraction.h"
#include "connoter/lexicon.h"
#include "connoter/stats.h"

namespace connoter {

struct EntityScore {
  double score = 0.0;  // sum / n_matches
  size_t n_matches = 0;
  double sum = 0.0;

  bool operator==(const EntityScore &) const = default;
};

struct VerbBreakdown {
  std::string lemma;
  Role role = Role::kAgent;
  size_t count = 0;
  double mean_score = 0.0;

  bool operator==(const VerbBreakdown &) const = default;
};

using EntityScores = std::map<std::string, EntityScore>;
using RankedScores = std::vector<std::pair<std::string, EntityScore>>;

struct ScoreReport {
  Dimension dimension;
  EntityScores per_entity;
  // doc_id -> entity -> score; every corpus document has a (maybe empty) row.
  std::map<std::string, EntityScores> per_document;
  // Per entity, sorted by count descending then (lemma, role).
  std::map<std::string, std::vector<VerbBreakdown>> verbs;
};

// Score descending, ties broken alphabetically.
RankedScores Rank(const EntityScores &scores);

// Mean of each entity's matched-instance scores; zero-score matches count.
// |doc_ids| lists the corpus documents so that documents without matches
// still resolve in GetScoresForDoc.
ScoreReport GetScoreTotals(std::span<const Triple> triples, const Dimension &dimension,
                           std::span<const std::string> doc_ids = {});

// Throws Error(kNotFound) naming the nearest known document id.
const EntityScores &GetScoresForDoc(const ScoreReport &report, std::string_view doc_id);

// Recombines per-document rows with the weighted-mean rule.
EntityScores MergeDocumentScores(const std::map<std::string, EntityScores> &per_document);

// Top |top_k| and bottom |bottom_k| entries of |ranked|, in rank order and
// without duplicates. Sets |clamped| when either k exceeds the entity count.
// Throws Error(kInvalidArgument) when both are zero.
RankedScores SelectTopBottom(const RankedScores &ranked, size_t top_k, size_t bottom_k,
                             bool *clamped = nullptr);

struct BootstrapEntity {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation across samples
  size_t present_in = 0;

  bool operator==(const BootstrapEntity &) const = default;
};

struct BootstrapReport {
  size_t samples = 0;
  uint64_t seed = 0;
  std::map<std::string, BootstrapEntity> per_entity;

  bool operator==(const BootstrapReport &) const = default;
};

constexpr size_t kDefaultBootstrapSamples = 20;

// Each sample draws |triples_by_doc.size()| documents with replacement
// (documents in doc_id order, sample i seeded with SampleSeed(seed, i)) and
// scores entities over the pooled triples of the drawn documents. Entity mean
// and std are taken over the samples in which the entity appears.
// Throws Error(kInvalidArgument) for zero samples or an empty corpus.
BootstrapReport BootstrapScores(const std::map<std::string, std::vector<Triple>> &triples_by_doc,
                                size_t samples, uint64_t seed, int jobs = 1);

struct DyadRole {
  std::string doc_id;
  std::string high;
  std::string low;
};

// Reads "# meta::high = ..." / "# meta::low = ..." from each document that
// has both keys.
std::vector<DyadRole> DyadRolesFromMetadata(std::span<const ParsedDocument> corpus);

// Tab- or comma-separated "doc_id high low" rows; an optional header row
// starting with "doc_id" and '#' comments are skipped.
std::vector<DyadRole> ParseDyadRoles(std::string_view text);

struct DyadPair {
  std::string doc_id;
  std::string high;
  std::string low;
  double high_score = 0.0;
  double low_score = 0.0;
  double diff = 0.0;  // high_score - low_score
};

struct DyadComparison {
  std::vector<DyadPair> pairs;  // only dyads with both sides scored
  std::vector<double> high_scores;  // every scored high-role entity
  std::vector<double> low_scores;
  double high_mean = 0.0;
  double low_mean = 0.0;
  double mean_diff = 0.0;
  double median_diff = 0.0;
  bool pooled = false;
  TTestResult test;
};

// Per-document role comparison. Throws Error(kNotFound) for a role row naming
// an unknown document and Error(kNoScoreablePair) when no dyad has both sides
// scored.
DyadComparison CompareDyads(const ScoreReport &report, std::span<const DyadRole> roles,
                            bool pooled = false);

struct VerbMatch {
  std::string doc_id;
  int sentence = 0;
  int verb_index = 0;
  std::string entity;
  Role role = Role::kAgent;
  double score = 0.0;
  bool same_cluster_pair = false;
};

// Triples of |lemma| in corpus order; empty for unmatched lemmas.
std::vector<VerbMatch> GetDocumentsForVerb(std::span<const Triple> triples, std::string_view lemma);

enum class VerbSign { kHasPower, kLacksPower, kNeutral };

const char *VerbSignName(VerbSign sign);

struct VerbMatrixRow {
  std::string lemma;
  Role role = Role::kAgent;
  size_t count = 0;
  double score = 0.0;
  VerbSign sign = VerbSign::kNeutral;

  // "hear (nsubj)".
  std::string Label() const;
};

// Verb/position counts for one entity, count descending then label.
// Throws Error(kNotFound) if the persona has no triples.
std::vector<VerbMatrixRow> VerbMatrixForPersona(std::span<const Triple> triples,
                                                std::string_view persona);

}  // namespace connoter

#endif  // CONNOTER_SCORING_H_
