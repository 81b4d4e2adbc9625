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

#include "connoter/scoring.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "connoter/error.h"
#include "connoter/parallel.h"
#include "connoter/sampling.h"
#include "connoter/text.h"

namespace connoter {
namespace {

struct Accumulator {
  double sum = 0.0;
  size_t n = 0;

  void Add(double score) {
    sum += score;
    ++n;
  }
  EntityScore Finish() const { return {sum / static_cast<double>(n), n, sum}; }
};

std::vector<Triple> Sorted(std::span<const Triple> triples) {
  std::vector<Triple> sorted(triples.begin(), triples.end());
  std::sort(sorted.begin(), sorted.end(), TripleLess);
  return sorted;
}

const EntityScore *FindEntity(const EntityScores &row, const std::string &name) {
  if (auto it = row.find(name); it != row.end()) return &it->second;
  const std::string folded = ToLower(name);
  const EntityScore *found = nullptr;
  for (const auto &[entity, score] : row) {
    if (ToLower(entity) != folded) continue;
    if (found) return nullptr;  // ambiguous
    found = &score;
  }
  return found;
}

}  // namespace

RankedScores Rank(const EntityScores &scores) {
  RankedScores ranked(scores.begin(), scores.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.second.score != b.second.score) return a.second.score > b.second.score;
    return a.first < b.first;
  });
  return ranked;
}

ScoreReport GetScoreTotals(std::span<const Triple> triples, const Dimension &dimension,
                           std::span<const std::string> doc_ids) {
  ScoreReport report;
  report.dimension = dimension;
  for (const std::string &doc_id : doc_ids) report.per_document[doc_id];

  std::map<std::string, Accumulator> entity;
  std::map<std::string, std::map<std::string, Accumulator>> document;
  std::map<std::string, std::map<std::pair<std::string, Role>, Accumulator>> verbs;
  for (const Triple &t : Sorted(triples)) {
    entity[t.entity].Add(t.score);
    document[t.doc_id][t.entity].Add(t.score);
    verbs[t.entity][{t.verb_lemma, t.role}].Add(t.score);
  }
  for (const auto &[name, acc] : entity) report.per_entity[name] = acc.Finish();
  for (const auto &[doc_id, row] : document) {
    EntityScores &out = report.per_document[doc_id];
    for (const auto &[name, acc] : row) out[name] = acc.Finish();
  }
  for (const auto &[name, by_verb] : verbs) {
    std::vector<VerbBreakdown> &rows = report.verbs[name];
    for (const auto &[key, acc] : by_verb) {
      rows.push_back({key.first, key.second, acc.n, acc.Finish().score});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const VerbBreakdown &a, const VerbBreakdown &b) {
      return a.count > b.count;
    });
  }
  return report;
}

const EntityScores &GetScoresForDoc(const ScoreReport &report, std::string_view doc_id) {
  auto it = report.per_document.find(std::string(doc_id));
  if (it != report.per_document.end()) return it->second;
  std::vector<std::string> known;
  for (const auto &[id, row] : report.per_document) known.push_back(id);
  std::string message = "unknown document '" + std::string(doc_id) + "'";
  if (auto nearest = NearestMatch(doc_id, known)) message += "; nearest: '" + *nearest + "'";
  throw Error(ErrorCode::kNotFound, message);
}

EntityScores MergeDocumentScores(const std::map<std::string, EntityScores> &per_document) {
  std::map<std::string, std::pair<double, size_t>> totals;
  for (const auto &[doc_id, row] : per_document) {
    for (const auto &[name, s] : row) {
      totals[name].first += s.score * static_cast<double>(s.n_matches);
      totals[name].second += s.n_matches;
    }
  }
  EntityScores merged;
  for (const auto &[name, total] : totals) {
    merged[name] = {total.first / static_cast<double>(total.second), total.second, total.first};
  }
  return merged;
}

RankedScores SelectTopBottom(const RankedScores &ranked, size_t top_k, size_t bottom_k,
                             bool *clamped) {
  if (top_k == 0 && bottom_k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty chart: top-k and bottom-k are both 0");
  }
  const size_t n = ranked.size();
  if (clamped) *clamped = top_k > n || bottom_k > n;
  top_k = std::min(top_k, n);
  bottom_k = std::min(bottom_k, n);
  RankedScores out;
  for (size_t i = 0; i < n; ++i) {
    if (i < top_k || i >= n - bottom_k) out.push_back(ranked[i]);
  }
  return out;
}

BootstrapReport BootstrapScores(const std::map<std::string, std::vector<Triple>> &triples_by_doc,
                                size_t samples, uint64_t seed, int jobs) {
  if (samples == 0) throw Error(ErrorCode::kInvalidArgument, "bootstrap needs at least 1 sample");
  if (triples_by_doc.empty()) throw Error(ErrorCode::kInvalidArgument, "bootstrap of an empty corpus");

  // Per-document partial sums, documents in doc_id order.
  std::vector<std::map<std::string, Accumulator>> partials;
  for (const auto &[doc_id, triples] : triples_by_doc) {
    auto &row = partials.emplace_back();
    for (const Triple &t : Sorted(triples)) row[t.entity].Add(t.score);
  }

  std::vector<std::map<std::string, double>> sample_scores(samples);
  ParallelFor(samples, jobs, [&](size_t i) {
    Resampler resampler(SampleSeed(seed, i));
    std::map<std::string, Accumulator> pooled;
    for (size_t doc : resampler.DrawWithReplacement(partials.size())) {
      for (const auto &[name, acc] : partials[doc]) {
        pooled[name].sum += acc.sum;
        pooled[name].n += acc.n;
      }
    }
    for (const auto &[name, acc] : pooled) sample_scores[i][name] = acc.Finish().score;
  });

  std::map<std::string, std::vector<double>> by_entity;
  for (const auto &sample : sample_scores) {
    for (const auto &[name, score] : sample) by_entity[name].push_back(score);
  }
  BootstrapReport report;
  report.samples = samples;
  report.seed = seed;
  for (const auto &[name, values] : by_entity) {
    report.per_entity[name] = {Mean(values), PopulationStd(values), values.size()};
  }
  return report;
}

std::vector<DyadRole> DyadRolesFromMetadata(std::span<const ParsedDocument> corpus) {
  std::vector<DyadRole> roles;
  for (const ParsedDocument &doc : corpus) {
    auto high = doc.metadata.find("high");
    auto low = doc.metadata.find("low");
    if (high == doc.metadata.end() || low == doc.metadata.end()) continue;
    roles.push_back({doc.doc_id, high->second, low->second});
  }
  return roles;
}

std::vector<DyadRole> ParseDyadRoles(std::string_view text) {
  std::vector<DyadRole> roles;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    char delimiter = trimmed.find('\t') != std::string_view::npos ? '\t' : ',';
    std::vector<std::string_view> cols = Split(trimmed, delimiter);
    if (cols.size() != 3) {
      throw Error(ErrorCode::kFormat, "roles line " + std::to_string(line_number) +
                                          ": expected doc_id, high, low");
    }
    if (ToLower(Trim(cols[0])) == "doc_id") continue;
    roles.push_back({std::string(Trim(cols[0])), std::string(Trim(cols[1])),
                     std::string(Trim(cols[2]))});
  }
  return roles;
}

DyadComparison CompareDyads(const ScoreReport &report, std::span<const DyadRole> roles,
                            bool pooled) {
  DyadComparison out;
  out.pooled = pooled;
  std::vector<double> diffs;
  for (const DyadRole &role : roles) {
    auto doc = report.per_document.find(role.doc_id);
    if (doc == report.per_document.end()) {
      throw Error(ErrorCode::kNotFound, "roles reference unknown document '" + role.doc_id + "'");
    }
    const EntityScore *high = FindEntity(doc->second, role.high);
    const EntityScore *low = FindEntity(doc->second, role.low);
    if (high) out.high_scores.push_back(high->score);
    if (low) out.low_scores.push_back(low->score);
    if (high && low) {
      out.pairs.push_back(
          {role.doc_id, role.high, role.low, high->score, low->score, high->score - low->score});
      diffs.push_back(out.pairs.back().diff);
    }
  }
  if (out.pairs.empty()) {
    throw Error(ErrorCode::kNoScoreablePair, "no scoreable pair: no dyad has both roles scored");
  }
  out.high_mean = Mean(out.high_scores);
  out.low_mean = Mean(out.low_scores);
  out.mean_diff = Mean(diffs);
  out.median_diff = Median(diffs);
  out.test = pooled ? PooledTTest(out.high_scores, out.low_scores)
                    : WelchTTest(out.high_scores, out.low_scores);
  return out;
}

std::vector<VerbMatch> GetDocumentsForVerb(std::span<const Triple> triples, std::string_view lemma) {
  const std::string key = ToLower(Trim(lemma));
  std::vector<VerbMatch> out;
  for (const Triple &t : Sorted(triples)) {
    if (t.verb_lemma != key) continue;
    out.push_back({t.doc_id, t.sentence, t.verb_index, t.entity, t.role, t.score,
                   t.same_cluster_pair});
  }
  return out;
}

const char *VerbSignName(VerbSign sign) {
  switch (sign) {
    case VerbSign::kHasPower: return "has-power";
    case VerbSign::kLacksPower: return "lacks-power";
    case VerbSign::kNeutral: return "neutral";
  }
  return "?";
}

std::string VerbMatrixRow::Label() const {
  return lemma + " (" + RolePosition(role) + ")";
}

std::vector<VerbMatrixRow> VerbMatrixForPersona(std::span<const Triple> triples,
                                                std::string_view persona) {
  std::map<std::pair<std::string, Role>, Accumulator> cells;
  std::set<std::string> known;
  for (const Triple &t : Sorted(triples)) {
    known.insert(t.entity);
    if (t.entity == persona) cells[{t.verb_lemma, t.role}].Add(t.score);
  }
  if (cells.empty()) {
    std::vector<std::string> names(known.begin(), known.end());
    std::string message = "persona '" + std::string(persona) + "' has no scored verbs";
    if (auto nearest = NearestMatch(persona, names)) message += "; did you mean '" + *nearest + "'?";
    message += " known: " + JoinNames(names);
    throw Error(ErrorCode::kNotFound, message);
  }
  std::vector<VerbMatrixRow> rows;
  for (const auto &[key, acc] : cells) {
    VerbMatrixRow row;
    row.lemma = key.first;
    row.role = key.second;
    row.count = acc.n;
    row.score = acc.Finish().score;
    row.sign = row.score > 0 ? VerbSign::kHasPower
               : row.score < 0 ? VerbSign::kLacksPower
                               : VerbSign::kNeutral;
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const VerbMatrixRow &a, const VerbMatrixRow &b) {
    if (a.count != b.count) return a.count > b.count;
    return a.Label() < b.Label();
  });
  return rows;
}

}  // namespace connoter
