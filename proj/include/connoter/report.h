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

#ifndef CONNOTER_REPORT_H_
#define CONNOTER_REPORT_H_

#include <span>
#include <string>

#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/extraction.h"
#include "connoter/scoring.h"
#include "json.hpp"

namespace connoter {

using Json = nlohmann::ordered_json;

// {"dimension", "entities": [{"name", "score", "n_matches", "sum", "verbs":
// [{"lemma", "role", "count", "mean_score"}]}], "documents": {doc_id: [...]},
// "bootstrap": {...} | null, "config": {...}}. Entities are ranked by score.
Json ScoreReportJson(const ScoreReport &report, const BootstrapReport *bootstrap,
                     const Json &config);

// "name,score,n_matches,sum" rows in rank order.
std::string ScoreReportCsv(const ScoreReport &report);

Json BootstrapJson(const BootstrapReport &bootstrap);
Json DyadComparisonJson(const DyadComparison &comparison);
Json ClusterJson(const EntityCluster &cluster);
Json VerbMatchesJson(std::span<const VerbMatch> matches);
Json EntityScoresJson(const EntityScores &scores);
Json CorpusStatsJson(const CorpusStats &stats);
Json EntityVerbPairsJson(std::span<const EntityVerbPair> pairs);

// Compact, deterministic JSON text with a trailing newline.
std::string DumpJson(const Json &json);

}  // namespace connoter

#endif  // CONNOTER_REPORT_H_
