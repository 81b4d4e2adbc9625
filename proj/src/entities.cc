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

#include "connoter/entities.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "connoter/error.h"
#include "connoter/text.h"
#include "json.hpp"

namespace connoter {
namespace {

constexpr std::string_view kMasculineTitles[] = {"mr", "mr.", "sir", "lord"};
constexpr std::string_view kFeminineTitles[] = {"mrs", "mrs.", "ms", "ms.", "miss", "lady"};
constexpr std::string_view kNeutralTitles[] = {"dr", "dr.", "prof", "prof."};

bool IsHonorific(std::string_view lower) {
  for (std::span<const std::string_view> list :
       {std::span<const std::string_view>(kMasculineTitles),
        std::span<const std::string_view>(kFeminineTitles),
        std::span<const std::string_view>(kNeutralTitles)}) {
    if (std::find(list.begin(), list.end(), lower) != list.end()) return true;
  }
  return false;
}

Gender TitleGender(std::string_view lower) {
  if (std::find(std::begin(kMasculineTitles), std::end(kMasculineTitles), lower) !=
      std::end(kMasculineTitles)) {
    return Gender::kMasculine;
  }
  if (std::find(std::begin(kFeminineTitles), std::end(kFeminineTitles), lower) !=
      std::end(kFeminineTitles)) {
    return Gender::kFeminine;
  }
  return Gender::kUnknown;
}

bool IsPersonLabel(std::string_view label) { return label == "PERSON" || label == "PER"; }

int KindPriority(MentionKind kind) { return static_cast<int>(kind); }

std::string SpanSurface(const Sentence &s, int start, int end) {
  std::string out;
  for (int i = start; i <= end; ++i) {
    if (i > start) out += ' ';
    out += s.at(i).surface;
  }
  return out;
}

// Lowercased name tokens with leading honorifics removed.
std::vector<std::string> NormalizedName(const Mention &m) {
  std::vector<std::string> tokens;
  for (std::string_view piece : SplitWhitespace(m.surface)) tokens.push_back(ToLower(piece));
  size_t skip = 0;
  while (skip + 1 < tokens.size() && IsHonorific(tokens[skip])) ++skip;
  tokens.erase(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(skip));
  return tokens;
}

bool IsTokenSuffix(const std::vector<std::string> &shorter,
                   const std::vector<std::string> &longer) {
  if (shorter.empty() || shorter.size() > longer.size()) return false;
  return std::equal(shorter.rbegin(), shorter.rend(), longer.rbegin());
}

bool NamesMatch(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  return a == b || IsTokenSuffix(a, b) || IsTokenSuffix(b, a);
}

// Token of the mention span whose head lies outside the span.
int SpanHead(const Sentence &s, const Mention &m) {
  for (int i = m.start; i <= m.end; ++i) {
    int head = s.at(i).head;
    if (head < m.start || head > m.end) return i;
  }
  return m.end;
}

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root survives, so the result does not depend on call order.
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<size_t> parent_;
};

bool Compatible(PronounClass cls, Gender gender, Number number) {
  switch (cls) {
    case PronounClass::kMasculine:
      return gender != Gender::kFeminine && number != Number::kPlural;
    case PronounClass::kFeminine:
      return gender != Gender::kMasculine && number != Number::kPlural;
    case PronounClass::kUnmarked:
      return true;
    case PronounClass::kDiscourse:
      return false;
  }
  return false;
}

std::string CanonicalName(const std::vector<const Mention *> &members, const std::string &persona) {
  if (!persona.empty()) return persona;
  // Count non-pronoun surfaces first; gazetteer terms are case-folded so that
  // "Doctor" at a sentence start and "doctor" agree.
  struct Count {
    size_t count = 0;
    size_t tokens = 0;
    size_t first = 0;
  };
  auto pick = [&](bool pronouns) -> std::optional<std::string> {
    std::map<std::string, Count> counts;
    for (size_t i = 0; i < members.size(); ++i) {
      const Mention &m = *members[i];
      if ((m.kind == MentionKind::kPronoun) != pronouns) continue;
      std::string key = m.kind == MentionKind::kNerPerson ? m.surface : ToLower(m.surface);
      auto [it, inserted] = counts.try_emplace(key);
      if (inserted) {
        it->second.first = i;
        it->second.tokens = SplitWhitespace(key).size();
      }
      ++it->second.count;
    }
    std::optional<std::string> best;
    Count best_count;
    for (const auto &[key, c] : counts) {
      bool better = !best || c.count > best_count.count ||
                    (c.count == best_count.count &&
                     (c.tokens > best_count.tokens ||
                      (c.tokens == best_count.tokens && c.first < best_count.first)));
      if (better) {
        best = key;
        best_count = c;
      }
    }
    return best;
  };
  if (auto name = pick(false)) return *name;
  if (auto name = pick(true)) return *name;
  return "?";
}

}  // namespace

const char *MentionKindName(MentionKind kind) {
  switch (kind) {
    case MentionKind::kPattern: return "pattern";
    case MentionKind::kNerPerson: return "ner_person";
    case MentionKind::kGazetteer: return "gazetteer";
    case MentionKind::kPronoun: return "pronoun";
  }
  return "?";
}

bool MentionBefore(const Mention &a, const Mention &b) {
  return std::tie(a.sentence, a.start, a.end) < std::tie(b.sentence, b.start, b.end);
}

std::optional<PronounClass> ClassifyPronoun(std::string_view form) {
  static const std::map<std::string_view, PronounClass> kClasses = {
      {"he", PronounClass::kMasculine},     {"him", PronounClass::kMasculine},
      {"his", PronounClass::kMasculine},    {"himself", PronounClass::kMasculine},
      {"she", PronounClass::kFeminine},     {"her", PronounClass::kFeminine},
      {"hers", PronounClass::kFeminine},    {"herself", PronounClass::kFeminine},
      {"they", PronounClass::kUnmarked},    {"them", PronounClass::kUnmarked},
      {"their", PronounClass::kUnmarked},   {"themselves", PronounClass::kUnmarked},
      {"i", PronounClass::kDiscourse},      {"me", PronounClass::kDiscourse},
      {"you", PronounClass::kDiscourse},    {"we", PronounClass::kDiscourse},
      {"us", PronounClass::kDiscourse},
  };
  auto it = kClasses.find(form);
  if (it == kClasses.end()) return std::nullopt;
  return it->second;
}

std::vector<PersonaPattern> ParsePersonaPatterns(std::string_view json_text) {
  std::vector<PersonaPattern> patterns;
  try {
    nlohmann::json root = nlohmann::json::parse(json_text);
    std::set<std::string> names;
    for (const nlohmann::json &item : root.at("personas")) {
      PersonaPattern p;
      p.name = item.at("name").get<std::string>();
      if (p.name.empty()) throw Error(ErrorCode::kFormat, "persona with empty name");
      if (!names.insert(p.name).second) {
        throw Error(ErrorCode::kFormat, "duplicate persona '" + p.name + "'");
      }
      for (const nlohmann::json &term : item.at("terms")) {
        std::string folded = ToLower(Trim(term.get<std::string>()));
        if (!folded.empty()) p.terms.push_back(folded);
      }
      if (p.terms.empty()) {
        throw Error(ErrorCode::kFormat, "persona '" + p.name + "' has no terms");
      }
      std::sort(p.terms.begin(), p.terms.end());
      p.terms.erase(std::unique(p.terms.begin(), p.terms.end()), p.terms.end());
      std::string mode = item.value("mode", "token_exact");
      if (mode == "token_exact") {
        p.mode = MatchMode::kTokenExact;
      } else if (mode == "lemma_exact") {
        p.mode = MatchMode::kLemmaExact;
      } else {
        throw Error(ErrorCode::kFormat, "persona '" + p.name + "': unknown mode '" + mode + "'");
      }
      patterns.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kFormat, std::string("persona config: ") + e.what());
  }
  return patterns;
}

std::vector<PersonaPattern> LoadPersonaPatterns(const std::filesystem::path &path) {
  return ParsePersonaPatterns(ReadTextFile(path));
}

const TermInfo *Gazetteer::Find(std::string_view term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? nullptr : &it->second;
}

Gazetteer ParseGazetteer(std::string_view text) {
  std::map<std::string, TermInfo, std::less<>> terms;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string_view> cols = Split(trimmed, '\t');
    TermInfo info;
    if (cols.size() > 1) {
      std::string_view g = Trim(cols[1]);
      if (g == "m") {
        info.gender = Gender::kMasculine;
      } else if (g == "f") {
        info.gender = Gender::kFeminine;
      } else if (g != "-" && !g.empty()) {
        throw Error(ErrorCode::kFormat, "gazetteer line " + std::to_string(line_number) +
                                            ": bad gender '" + std::string(g) + "'");
      }
    }
    if (cols.size() > 2) {
      std::string_view n = Trim(cols[2]);
      if (n == "sg") {
        info.number = Number::kSingular;
      } else if (n == "pl") {
        info.number = Number::kPlural;
      } else if (n != "-" && !n.empty()) {
        throw Error(ErrorCode::kFormat, "gazetteer line " + std::to_string(line_number) +
                                            ": bad number '" + std::string(n) + "'");
      }
    }
    terms[ToLower(Trim(cols[0]))] = info;
  }
  return Gazetteer(std::move(terms));
}

Gazetteer LoadGazetteer(const std::filesystem::path &path) {
  return ParseGazetteer(ReadTextFile(path));
}

Gender NameGenderTable::Lookup(std::string_view name) const {
  auto it = names_.find(ToLower(name));
  return it == names_.end() ? Gender::kUnknown : it->second;
}

NameGenderTable ParseNameGenderTable(std::string_view text) {
  std::map<std::string, Gender, std::less<>> names;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string_view> cols = Split(trimmed, '\t');
    std::string_view g = cols.size() > 1 ? Trim(cols[1]) : std::string_view();
    if (g != "m" && g != "f") {
      throw Error(ErrorCode::kFormat,
                  "names line " + std::to_string(line_number) + ": expected 'name<TAB>m|f'");
    }
    names[ToLower(Trim(cols[0]))] = g == "m" ? Gender::kMasculine : Gender::kFeminine;
  }
  return NameGenderTable(std::move(names));
}

NameGenderTable LoadNameGenderTable(const std::filesystem::path &path) {
  return ParseNameGenderTable(ReadTextFile(path));
}

std::optional<size_t> DocumentEntities::MentionAt(int sentence, int index) const {
  auto it = token_to_mention_.find({sentence, index});
  if (it == token_to_mention_.end()) return std::nullopt;
  return it->second;
}

std::vector<Mention> DetectMentions(const ParsedDocument &doc, const EntityResources &resources) {
  std::vector<Mention> candidates;
  for (int si = 0; si < static_cast<int>(doc.sentences.size()); ++si) {
    const Sentence &s = doc.sentences[static_cast<size_t>(si)];
    auto add = [&](int start, int end, MentionKind kind, std::string persona = {}) {
      candidates.push_back(
          {doc.doc_id, si, start, end, SpanSurface(s, start, end), kind, std::move(persona)});
    };

    // NER person spans, extended left over an adjacent honorific.
    int span_start = 0;
    std::string span_label;
    auto close_span = [&](int end) {
      if (span_start == 0) return;
      if (IsPersonLabel(span_label)) {
        int start = span_start;
        if (start > 1 && IsHonorific(ToLower(s.at(start - 1).surface))) --start;
        add(start, end, MentionKind::kNerPerson);
      }
      span_start = 0;
      span_label.clear();
    };
    for (const Token &t : s.tokens) {
      std::string_view tag = t.ner;
      std::string_view label = tag;
      bool begins = true;
      if (StartsWith(tag, "B-") || StartsWith(tag, "I-")) {
        label = tag.substr(2);
        begins = tag[0] == 'B';
      }
      if (tag.empty()) {
        close_span(t.index - 1);
      } else if (begins || span_start == 0 || label != span_label) {
        close_span(t.index - 1);
        span_start = t.index;
        span_label = std::string(label);
      }
    }
    close_span(s.size());

    for (const Token &t : s.tokens) {
      const std::string form = ToLower(t.surface);
      for (const PersonaPattern &p : resources.patterns) {
        const std::string &key = p.mode == MatchMode::kTokenExact ? form : t.lemma;
        if (std::binary_search(p.terms.begin(), p.terms.end(), key)) {
          add(t.index, t.index, MentionKind::kPattern, p.name);
          break;
        }
      }
      if (t.upos != "NOUN" && t.upos != "PROPN" && t.upos != "PRON") continue;
      const bool pronoun = ClassifyPronoun(form).has_value();
      if (resources.gazetteer.Find(form) ||
          (!pronoun && resources.gazetteer.Find(t.lemma))) {
        add(t.index, t.index, pronoun ? MentionKind::kPronoun : MentionKind::kGazetteer);
      }
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Mention &a, const Mention &b) {
    return KindPriority(a.kind) < KindPriority(b.kind);
  });
  std::vector<Mention> accepted;
  for (Mention &m : candidates) {
    bool clash = std::any_of(accepted.begin(), accepted.end(), [&](const Mention &other) {
      return other.Overlaps(m.sentence, m.start, m.end);
    });
    if (!clash) accepted.push_back(std::move(m));
  }
  std::sort(accepted.begin(), accepted.end(), MentionBefore);
  return accepted;
}

std::vector<EntityCluster> ResolveClusters(const ParsedDocument &doc,
                                           std::span<const Mention> mentions,
                                           const EntityResources &resources,
                                           std::vector<size_t> *mention_cluster) {
  const size_t n = mentions.size();
  // Work on document order regardless of input order.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return MentionBefore(mentions[a], mentions[b]); });

  constexpr size_t kNone = static_cast<size_t>(-1);
  std::vector<size_t> group(n, kNone);  // provisional cluster id per mention
  std::vector<std::string> group_persona;
  std::vector<bool> group_named;  // has a non-pronoun, non-pattern mention
  auto new_group = [&](std::string persona, bool named) {
    group_persona.push_back(std::move(persona));
    group_named.push_back(named);
    return group_persona.size() - 1;
  };

  // 1. Persona patterns.
  std::map<std::string, size_t> persona_group;
  for (size_t i : order) {
    const Mention &m = mentions[i];
    if (m.kind != MentionKind::kPattern) continue;
    auto [it, inserted] = persona_group.try_emplace(m.persona, 0);
    if (inserted) it->second = new_group(m.persona, false);
    group[i] = it->second;
  }

  // 2. Name matching.
  // Equal or suffix-related names share their last token, so candidates are
  // bucketed by it.
  std::vector<std::vector<std::string>> normalized(n);
  std::map<std::string, std::vector<size_t>> by_last_token;
  for (size_t i : order) {
    const Mention &m = mentions[i];
    if (m.kind != MentionKind::kNerPerson && m.kind != MentionKind::kGazetteer) continue;
    normalized[i] = NormalizedName(m);
    std::vector<size_t> &bucket = by_last_token[normalized[i].back()];
    size_t found = kNone;
    for (size_t member : bucket) {
      if (NamesMatch(normalized[i], normalized[member]) &&
          (found == kNone || group[member] < found)) {
        found = group[member];
      }
    }
    group[i] = found == kNone ? new_group("", true) : found;
    bucket.push_back(i);
  }

  // Predicate nominals ("Alan was a CEO") and appositives join the subject's
  // (or governor's) cluster.
  UnionFind uf(group_persona.size());
  std::map<std::pair<int, int>, size_t> named_token;
  for (size_t i = 0; i < n; ++i) {
    if (group[i] == kNone || !group_named[group[i]]) continue;
    for (int t = mentions[i].start; t <= mentions[i].end; ++t) {
      named_token[{mentions[i].sentence, t}] = i;
    }
  }
  auto named_mention_at = [&](int sentence, int token) -> size_t {
    auto it = named_token.find({sentence, token});
    return it == named_token.end() ? kNone : it->second;
  };
  for (size_t i : order) {
    const Mention &m = mentions[i];
    if (group[i] == kNone || !group_named[group[i]]) continue;
    const Sentence &s = doc.sentences[static_cast<size_t>(m.sentence)];
    const int head = SpanHead(s, m);
    const Token &head_token = s.at(head);
    bool has_cop = false;
    int subject = 0;
    for (const Token &t : s.tokens) {
      if (t.head != head) continue;
      if (t.deprel == "cop") has_cop = true;
      if (t.deprel == "nsubj") subject = t.index;
    }
    if (has_cop && subject != 0) {
      size_t other = named_mention_at(m.sentence, subject);
      if (other != kNone) uf.Union(group[i], group[other]);
    }
    if (head_token.deprel == "appos" && head_token.head != 0) {
      size_t other = named_mention_at(m.sentence, head_token.head);
      if (other != kNone) uf.Union(group[i], group[other]);
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (group[i] != kNone && group_named[group[i]]) group[i] = uf.Find(group[i]);
  }

  // Gender/number evidence per named group, first evidence wins.
  std::vector<Gender> gender(group_persona.size(), Gender::kUnknown);
  std::vector<Number> number(group_persona.size(), Number::kUnknown);
  for (size_t i : order) {
    const Mention &m = mentions[i];
    if (group[i] == kNone || !group_named[group[i]]) continue;
    const size_t g = group[i];
    std::vector<std::string_view> words = SplitWhitespace(m.surface);
    Gender evidence = Gender::kUnknown;
    Number count = Number::kUnknown;
    if (m.kind == MentionKind::kNerPerson) {
      count = Number::kSingular;
      evidence = TitleGender(ToLower(words.front()));
      if (evidence == Gender::kUnknown) {
        for (std::string_view w : words) {
          if (IsHonorific(ToLower(w))) continue;
          evidence = resources.names.Lookup(w);
          break;
        }
      }
    } else {
      const Token &t = doc.sentences[static_cast<size_t>(m.sentence)].at(m.start);
      const TermInfo *info = resources.gazetteer.Find(ToLower(t.surface));
      if (!info) info = resources.gazetteer.Find(t.lemma);
      if (info) {
        evidence = info->gender;
        count = info->number;
      }
    }
    if (gender[g] == Gender::kUnknown) gender[g] = evidence;
    if (number[g] == Number::kUnknown) number[g] = count;
  }

  // 3. Pronoun attachment, in document order so that earlier attachments
  // count as recent mentions for later pronouns.
  for (size_t k = 0; k < n; ++k) {
    const size_t i = order[k];
    const Mention &p = mentions[i];
    if (p.kind != MentionKind::kPronoun) continue;
    auto cls = ClassifyPronoun(ToLower(p.surface));
    size_t best = kNone;
    if (cls && *cls != PronounClass::kDiscourse) {
      for (size_t back = k; back-- > 0 && best == kNone;) {
        const size_t j = order[back];
        const Mention &cand = mentions[j];
        if (cand.sentence < p.sentence - 1) break;
        if (group[j] == kNone || !group_named[group[j]]) continue;
        if (Compatible(*cls, gender[group[j]], number[group[j]])) best = j;
      }
    }
    if (best == kNone) {
      group[i] = new_group("", false);
      gender.push_back(Gender::kUnknown);
      number.push_back(Number::kUnknown);
      continue;
    }
    const size_t g = group[best];
    group[i] = g;
    if (gender[g] == Gender::kUnknown) {
      if (*cls == PronounClass::kMasculine) gender[g] = Gender::kMasculine;
      if (*cls == PronounClass::kFeminine) gender[g] = Gender::kFeminine;
    }
  }

  // Materialize clusters ordered by first mention.
  std::map<size_t, size_t> cluster_index;
  std::vector<std::vector<const Mention *>> members;
  std::vector<size_t> owner(n);
  for (size_t i : order) {
    auto [it, inserted] = cluster_index.try_emplace(group[i], members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(&mentions[i]);
    owner[i] = it->second;
  }
  std::vector<EntityCluster> clusters(members.size());
  for (const auto &[g, index] : cluster_index) {
    EntityCluster &c = clusters[index];
    c.canonical_name = CanonicalName(members[index], group_persona[g]);
    for (const Mention *m : members[index]) c.mentions.push_back(*m);
  }
  if (mention_cluster) *mention_cluster = std::move(owner);
  return clusters;
}

DocumentEntities AnalyzeEntities(const ParsedDocument &doc, const EntityResources &resources) {
  DocumentEntities result;
  result.doc_id = doc.doc_id;
  result.mentions = DetectMentions(doc, resources);
  result.clusters = ResolveClusters(doc, result.mentions, resources, &result.mention_cluster);
  for (size_t i = 0; i < result.mentions.size(); ++i) {
    const Mention &m = result.mentions[i];
    for (int t = m.start; t <= m.end; ++t) result.token_to_mention_[{m.sentence, t}] = i;
  }
  return result;
}

std::map<std::string, EntityCluster> MergeClusters(std::span<const DocumentEntities> docs) {
  std::map<std::string, EntityCluster> merged;
  for (const DocumentEntities &doc : docs) {
    for (const EntityCluster &c : doc.clusters) {
      EntityCluster &target = merged[c.canonical_name];
      target.canonical_name = c.canonical_name;
      target.mentions.insert(target.mentions.end(), c.mentions.begin(), c.mentions.end());
    }
  }
  for (auto &[name, cluster] : merged) {
    std::sort(cluster.mentions.begin(), cluster.mentions.end(),
              [](const Mention &a, const Mention &b) {
                return std::tie(a.doc_id, a.sentence, a.start, a.end) <
                       std::tie(b.doc_id, b.sentence, b.start, b.end);
              });
  }
  return merged;
}

const EntityCluster &GetPersonaCluster(const std::map<std::string, EntityCluster> &merged,
                                       std::string_view persona) {
  auto it = merged.find(std::string(persona));
  if (it != merged.end()) return it->second;
  std::vector<std::string> known;
  for (const auto &[name, cluster] : merged) known.push_back(name);
  std::string message = "unknown persona '" + std::string(persona) + "'";
  if (auto suggestion = NearestMatch(persona, known)) {
    message += "; did you mean '" + *suggestion + "'?";
  }
  message += " known: " + JoinNames(known);
  throw Error(ErrorCode::kNotFound, message);
}

}  // namespace connoter
