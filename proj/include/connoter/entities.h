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

#ifndef CONNOTER_ENTITIES_H_
#define CONNOTER_ENTITIES_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "connoter/corpus.h"

namespace connoter {

// Detector that produced a mention, in decreasing priority.
enum class MentionKind { kPattern, kNerPerson, kGazetteer, kPronoun };

const char *MentionKindName(MentionKind kind);

struct Mention {
  std::string doc_id;
  int sentence = 0;  // 0-based
  int start = 0;     // 1-based token index, inclusive
  int end = 0;       // inclusive
  std::string surface;
  MentionKind kind = MentionKind::kGazetteer;
  std::string persona;  // set for kPattern

  bool Overlaps(int s, int b, int e) const {
    return sentence == s && start <= e && b <= end;
  }
  bool operator==(const Mention &) const = default;
};

// True if |a| comes before |b| in document order.
bool MentionBefore(const Mention &a, const Mention &b);

enum class MatchMode { kTokenExact, kLemmaExact };

struct PersonaPattern {
  std::string name;
  std::vector<std::string> terms;  // lowercase
  MatchMode mode = MatchMode::kTokenExact;
};

// Parses {"personas": [{"name": ..., "terms": [...], "mode": "token_exact"}]}.
// Throws Error(kFormat) on schema violations, empty term lists or duplicate
// persona names.
std::vector<PersonaPattern> ParsePersonaPatterns(std::string_view json_text);
std::vector<PersonaPattern> LoadPersonaPatterns(const std::filesystem::path &path);

enum class Gender { kUnknown, kMasculine, kFeminine };
enum class Number { kUnknown, kSingular, kPlural };

struct TermInfo {
  Gender gender = Gender::kUnknown;
  Number number = Number::kUnknown;
};

// Person-referring terms: pronouns, professions, kinship nouns. One term per
// line, optionally followed by tab-separated gender (m|f|-) and number
// (sg|pl|-) annotations; '#' starts a comment.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(std::map<std::string, TermInfo, std::less<>> terms)
      : terms_(std::move(terms)) {}

  const TermInfo *Find(std::string_view term) const;
  size_t size() const { return terms_.size(); }

 private:
  std::map<std::string, TermInfo, std::less<>> terms_;
};

Gazetteer ParseGazetteer(std::string_view text);
Gazetteer LoadGazetteer(const std::filesystem::path &path);

// First names with a conventional gender, "name<TAB>m|f" per line. Used only
// to rule out gender-incompatible pronoun antecedents.
class NameGenderTable {
 public:
  NameGenderTable() = default;
  explicit NameGenderTable(std::map<std::string, Gender, std::less<>> names)
      : names_(std::move(names)) {}

  Gender Lookup(std::string_view name) const;
  size_t size() const { return names_.size(); }

 private:
  std::map<std::string, Gender, std::less<>> names_;
};

NameGenderTable ParseNameGenderTable(std::string_view text);
NameGenderTable LoadNameGenderTable(const std::filesystem::path &path);

struct EntityResources {
  std::vector<PersonaPattern> patterns;
  Gazetteer gazetteer;
  NameGenderTable names;
};

struct EntityCluster {
  std::string canonical_name;
  std::vector<Mention> mentions;  // document (or corpus) order
};

// Mentions and clusters of one document. |mention_cluster[i]| is the index
// of the cluster holding |mentions[i]|.
struct DocumentEntities {
  std::string doc_id;
  std::vector<Mention> mentions;
  std::vector<EntityCluster> clusters;
  std::vector<size_t> mention_cluster;

  // Mention covering token |index| of sentence |sentence|, if any.
  std::optional<size_t> MentionAt(int sentence, int index) const;

 private:
  friend DocumentEntities AnalyzeEntities(const ParsedDocument &, const EntityResources &);
  std::map<std::pair<int, int>, size_t> token_to_mention_;
};

// Pronoun classes used for antecedent compatibility.
enum class PronounClass { kMasculine, kFeminine, kUnmarked, kDiscourse };
std::optional<PronounClass> ClassifyPronoun(std::string_view lowercase_form);

// Finds person mentions: NER PERSON spans, persona pattern terms, gazetteer
// terms (pronoun terms become kPronoun). Overlaps resolve by MentionKind
// priority; the result is non-overlapping and in document order.
std::vector<Mention> DetectMentions(const ParsedDocument &doc, const EntityResources &resources);

// Groups one document's mentions:
//   1. pattern mentions of one persona form one cluster named after it;
//   2. name mentions (NER, gazetteer) merge on normalized-name equality or
//      token-suffix match after honorific stripping ("Jones" ~ "Mr. Jones"),
//      and predicate nominals / appositives join their subject's cluster;
//   3. each remaining pronoun attaches to the compatible cluster mentioned
//      most recently within the current or previous sentence, else becomes a
//      singleton.
std::vector<EntityCluster> ResolveClusters(const ParsedDocument &doc,
                                           std::span<const Mention> mentions,
                                           const EntityResources &resources,
                                           std::vector<size_t> *mention_cluster = nullptr);

// DetectMentions + ResolveClusters with a token lookup index.
DocumentEntities AnalyzeEntities(const ParsedDocument &doc, const EntityResources &resources);

// Corpus-level clusters keyed by canonical name; mentions sorted by
// (doc_id, sentence, start). The merge is independent of input order.
std::map<std::string, EntityCluster> MergeClusters(std::span<const DocumentEntities> docs);

// Throws Error(kNotFound) with the closest known persona as a suggestion.
const EntityCluster &GetPersonaCluster(const std::map<std::string, EntityCluster> &merged,
                                       std::string_view persona);

}  // namespace connoter

#endif  // CONNOTER_ENTITIES_H_
