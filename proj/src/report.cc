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

#include "connoter/report.h"

#include <cmath>

#include "connoter/text.h"

namespace connoter {
namespace {

// NaN and infinities have no JSON spelling; report them as null.
Json Real(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json RankedJson(const EntityScores &scores) {
  Json out = Json::array();
  for (const auto &[name, s] : Rank(scores)) {
    out.push_back({{"name", name}, {"score", Real(s.score)}, {"n_matches", s.n_matches},
                   {"sum", Real(s.sum)}});
  }
  return out;
}

}  // namespace

Json ScoreReportJson(const ScoreReport &report, const BootstrapReport *bootstrap,
                     const Json &config) {
  Json out;
  out["dimension"] = report.dimension.ToString();
  Json entities = Json::array();
  for (const auto &[name, s] : Rank(report.per_entity)) {
    Json verbs = Json::array();
    if (auto it = report.verbs.find(name); it != report.verbs.end()) {
      for (const VerbBreakdown &v : it->second) {
        verbs.push_back({{"lemma", v.lemma}, {"role", RoleName(v.role)}, {"count", v.count},
                         {"mean_score", Real(v.mean_score)}});
      }
    }
    entities.push_back({{"name", name}, {"score", Real(s.score)}, {"n_matches", s.n_matches},
                        {"sum", Real(s.sum)}, {"verbs", std::move(verbs)}});
  }
  out["entities"] = std::move(entities);
  Json documents = Json::object();
  for (const auto &[doc_id, row] : report.per_document) documents[doc_id] = RankedJson(row);
  out["documents"] = std::move(documents);
  out["bootstrap"] = bootstrap ? BootstrapJson(*bootstrap) : Json(nullptr);
  out["config"] = config;
  return out;
}

std::string ScoreReportCsv(const ScoreReport &report) {
  std::string out = "name,score,n_matches,sum\n";
  for (const auto &[name, s] : Rank(report.per_entity)) {
    std::string field = name;
    if (field.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : field) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      field = quoted + "\"";
    }
    out += field + "," + FormatFixed(s.score, 6) + "," + std::to_string(s.n_matches) + "," +
           FormatFixed(s.sum, 6) + "\n";
  }
  return out;
}

Json BootstrapJson(const BootstrapReport &bootstrap) {
  Json entities = Json::array();
  std::vector<std::pair<std::string, BootstrapEntity>> ranked(bootstrap.per_entity.begin(),
                                                              bootstrap.per_entity.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.second.mean != b.second.mean) return a.second.mean > b.second.mean;
    return a.first < b.first;
  });
  for (const auto &[name, e] : ranked) {
    entities.push_back({{"name", name}, {"mean", Real(e.mean)}, {"std", Real(e.std)},
                        {"present_in", e.present_in}});
  }
  return {{"samples", bootstrap.samples}, {"seed", bootstrap.seed}, {"entities", entities}};
}

Json DyadComparisonJson(const DyadComparison &c) {
  Json pairs = Json::array();
  for (const DyadPair &p : c.pairs) {
    pairs.push_back({{"doc_id", p.doc_id}, {"high", p.high}, {"low", p.low},
                     {"high_score", Real(p.high_score)}, {"low_score", Real(p.low_score)},
                     {"diff", Real(p.diff)}});
  }
  Json high = Json::array(), low = Json::array();
  for (double v : c.high_scores) high.push_back(Real(v));
  for (double v : c.low_scores) low.push_back(Real(v));
  return {{"pairs", pairs},
          {"group_means", {{"high", Real(c.high_mean)}, {"low", Real(c.low_mean)}}},
          {"high_scores", high},
          {"low_scores", low},
          {"mean_diff", Real(c.mean_diff)},
          {"median_diff", Real(c.median_diff)},
          {"test", c.pooled ? "pooled" : "welch"},
          {"t_statistic", Real(c.test.t)},
          {"df", Real(c.test.df)},
          {"p_value", Real(c.test.p)}};
}

Json ClusterJson(const EntityCluster &cluster) {
  Json mentions = Json::array();
  for (const Mention &m : cluster.mentions) {
    mentions.push_back({{"doc_id", m.doc_id}, {"sentence", m.sentence}, {"start", m.start},
                        {"end", m.end}, {"surface", m.surface},
                        {"kind", MentionKindName(m.kind)}});
  }
  return {{"name", cluster.canonical_name}, {"mentions", mentions}};
}

Json VerbMatchesJson(std::span<const VerbMatch> matches) {
  Json out = Json::array();
  for (const VerbMatch &m : matches) {
    out.push_back({{"doc_id", m.doc_id}, {"sentence", m.sentence}, {"verb_index", m.verb_index},
                   {"entity", m.entity}, {"role", RoleName(m.role)}, {"score", Real(m.score)},
                   {"same_cluster_pair", m.same_cluster_pair}});
  }
  return out;
}

Json EntityScoresJson(const EntityScores &scores) { return RankedJson(scores); }

Json CorpusStatsJson(const CorpusStats &stats) {
  return {{"documents", stats.documents}, {"sentences", stats.sentences},
          {"tokens", stats.tokens}, {"verb_tokens", stats.verb_tokens}};
}

Json EntityVerbPairsJson(std::span<const EntityVerbPair> pairs) {
  Json out = Json::array();
  for (const EntityVerbPair &p : pairs) {
    out.push_back({{"entity", p.entity}, {"lemma", p.verb_lemma}, {"role", RoleName(p.role)},
                   {"count", p.count}});
  }
  return out;
}

std::string DumpJson(const Json &json) { return json.dump(2) + "\n"; }

}  // namespace connoter
