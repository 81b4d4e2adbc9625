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

#include "connoter/extraction.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "connoter/text.h"

namespace connoter {
namespace {

std::string_view BaseRelation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

bool IsSpanRelation(std::string_view deprel) {
  std::string_view base = BaseRelation(deprel);
  return base == "det" || base == "amod" || base == "compound" || base == "flat";
}

std::vector<std::vector<int>> Children(const Sentence &s) {
  std::vector<std::vector<int>> children(static_cast<size_t>(s.size()) + 1);
  for (const Token &t : s.tokens) children[static_cast<size_t>(t.head)].push_back(t.index);
  return children;
}

std::optional<Role> ArgumentRole(std::string_view deprel, const ExtractionOptions &options) {
  if (deprel == "nsubj") return Role::kAgent;
  if (deprel == "obj" || deprel == "dobj") return Role::kTheme;
  if (options.passive_as_theme && (deprel == "nsubj:pass" || deprel == "nsubjpass")) {
    return Role::kTheme;
  }
  return std::nullopt;
}

const DimensionView::Entry *MatchEntry(const Sentence &s, const Token &verb,
                                       const std::vector<int> &verb_children,
                                       const DimensionView &view,
                                       const ExtractionOptions &options) {
  std::vector<const DimensionView::Entry *> candidates = view.Candidates(verb.lemma);
  if (candidates.empty()) return nullptr;
  const DimensionView::Entry *plain =
      candidates.front()->particle.empty() ? candidates.front() : nullptr;
  if (!options.particle_check) return plain ? plain : candidates.front();

  std::vector<std::string> particles;
  for (int c : verb_children) {
    if (s.at(c).deprel == "compound:prt") particles.push_back(ToLower(s.at(c).surface));
  }
  std::string joined;
  for (const std::string &p : particles) joined += (joined.empty() ? "" : " ") + p;
  for (const DimensionView::Entry *e : candidates) {
    if (e->particle.empty()) continue;
    if (e->particle == joined ||
        std::find(particles.begin(), particles.end(), e->particle) != particles.end()) {
      return e;
    }
  }
  return plain;
}

std::optional<size_t> LinkedMention(const DocumentEntities &entities, int sentence, int argument,
                                    const TokenSpan &span) {
  if (auto m = entities.MentionAt(sentence, argument)) return m;
  for (int i = span.start; i <= span.end; ++i) {
    if (auto m = entities.MentionAt(sentence, i)) return m;
  }
  return std::nullopt;
}

}  // namespace

bool TripleLess(const Triple &a, const Triple &b) { return a.SortKey() < b.SortKey(); }

TokenSpan ArgumentSpan(const Sentence &sentence, int argument) {
  const std::vector<std::vector<int>> children = Children(sentence);
  std::set<int> members = {argument};
  std::vector<int> stack = {argument};
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (int c : children[static_cast<size_t>(node)]) {
      if (IsSpanRelation(sentence.at(c).deprel) && members.insert(c).second) stack.push_back(c);
    }
  }
  TokenSpan span{argument, argument};
  while (members.count(span.start - 1)) --span.start;
  while (members.count(span.end + 1)) ++span.end;
  return span;
}

std::vector<Triple> ExtractTriples(const ParsedDocument &doc, const DocumentEntities &entities,
                                   const DimensionView &view,
                                   const ExtractionOptions &options) {
  std::vector<Triple> triples;
  for (int si = 0; si < static_cast<int>(doc.sentences.size()); ++si) {
    const Sentence &s = doc.sentences[static_cast<size_t>(si)];
    const std::vector<std::vector<int>> children = Children(s);
    for (const Token &verb : s.tokens) {
      if (!verb.IsVerb()) continue;
      const auto &verb_children = children[static_cast<size_t>(verb.index)];
      const DimensionView::Entry *entry = MatchEntry(s, verb, verb_children, view, options);
      if (!entry) continue;
      for (int dep : verb_children) {
        std::optional<Role> role = ArgumentRole(s.at(dep).deprel, options);
        if (!role) continue;
        // The argument and every conjunct hanging off it.
        std::vector<int> arguments = {dep};
        for (size_t k = 0; k < arguments.size(); ++k) {
          for (int c : children[static_cast<size_t>(arguments[k])]) {
            if (s.at(c).deprel == "conj") arguments.push_back(c);
          }
        }
        for (int arg : arguments) {
          TokenSpan span = ArgumentSpan(s, arg);
          std::optional<size_t> mention = LinkedMention(entities, si, arg, span);
          if (!mention) continue;
          Triple t;
          t.entity = entities.clusters[entities.mention_cluster[*mention]].canonical_name;
          t.verb_lemma = entry->key;
          t.role = *role;
          t.score = entry->scores.For(*role);
          t.doc_id = doc.doc_id;
          t.sentence = si;
          t.verb_index = verb.index;
          t.argument_index = arg;
          triples.push_back(std::move(t));
        }
      }
    }
  }
  std::sort(triples.begin(), triples.end(), TripleLess);

  // Flag verbs linking one entity as both agent and theme.
  for (size_t i = 0; i < triples.size();) {
    size_t j = i;
    while (j < triples.size() && triples[j].sentence == triples[i].sentence &&
           triples[j].verb_index == triples[i].verb_index) {
      ++j;
    }
    for (size_t a = i; a < j; ++a) {
      for (size_t b = i; b < j; ++b) {
        if (triples[a].role != triples[b].role && triples[a].entity == triples[b].entity) {
          triples[a].same_cluster_pair = true;
        }
      }
    }
    i = j;
  }
  return triples;
}

std::vector<EntityVerbPair> EntityVerbPairs(std::span<const Triple> triples) {
  std::map<std::tuple<std::string, std::string, Role>, size_t> counts;
  for (const Triple &t : triples) ++counts[{t.entity, t.verb_lemma, t.role}];
  std::vector<EntityVerbPair> pairs;
  for (const auto &[key, count] : counts) {
    pairs.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  }
  return pairs;
}

}  // namespace connoter
