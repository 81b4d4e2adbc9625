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

#ifndef CONNOTER_LEXICON_H_
#define CONNOTER_LEXICON_H_

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace connoter {

// Three-valued label used by categorical lexica.
enum class Polarity { kNegative = -1, kNeutral = 0, kPositive = 1 };

inline double PolarityScore(Polarity p) { return static_cast<int>(p); }

enum class Role { kAgent, kTheme };

// "agent"/"theme".
const char *RoleName(Role role);

// Dependency position used in chart labels: "nsubj" for agents, "dobj" for
// themes.
const char *RolePosition(Role role);

enum class DimensionName { kEffect, kValue, kState, kPerspective, kPower, kAgency };

// A scored relation family plus an optional directional variant. Only
// perspective uses variants: "mutual" (agent<->theme sentiment), "writer"
// and "reader".
struct Dimension {
  DimensionName name = DimensionName::kPower;
  std::string variant;

  // "power", "perspective:writer", ...
  std::string ToString() const;

  // Inverse of ToString(). Throws Error(kInvalidArgument).
  static Dimension Parse(std::string_view text);

  auto operator<=>(const Dimension &) const = default;
};

struct ScorePair {
  double agent = 0.0;
  double theme = 0.0;

  double For(Role role) const { return role == Role::kAgent ? agent : theme; }
  bool operator==(const ScorePair &) const = default;
};

struct VerbEntry {
  // Full case-folded key as written in the file, e.g. "step in".
  std::string key;
  // Head lemma ("step") and optional particle ("in").
  std::string lemma;
  std::string particle;
  // Dimensions absent from the source row are absent here.
  std::map<Dimension, ScorePair> scores;

  bool operator==(const VerbEntry &) const = default;
};

enum class LexiconFormat { kNumeric, kCategorical };

// Immutable after load.
class Lexicon {
 public:
  Lexicon(std::string name, LexiconFormat format,
          std::map<std::string, VerbEntry> entries);

  const std::string &name() const { return name_; }
  LexiconFormat format() const { return format_; }
  const std::map<std::string, VerbEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  const VerbEntry *Find(std::string_view key) const;

  // Every dimension carried by at least one entry, sorted.
  std::vector<Dimension> Dimensions() const;

 private:
  std::string name_;
  LexiconFormat format_;
  std::map<std::string, VerbEntry> entries_;
};

// Maps a numeric-lexicon column header to the (dimension, role) it scores.
struct ColumnBinding {
  Dimension dimension;
  Role role;
};
using ColumnMap = std::map<std::string, ColumnBinding>;

// Derives bindings from header names. Recognized forms, case-insensitive:
//   <dimension>_agent, <dimension>_theme           (power_agent, value_theme)
//   perspective_<variant>_agent|theme              (perspective_writer_agent)
//   Effect(s), Effect(o), Value(..), State(..)     (s = agent, o = theme)
//   Perspective(ws|wo|rs|ro|os|so)
//   agent_score, theme_score                       (needs |generic_dimension|)
// Throws Error(kFormat) for anything else.
ColumnMap InferNumericColumns(const std::vector<std::string> &header,
                              std::optional<Dimension> generic_dimension);

// Real-valued lexicon: one verb per row, scores in [-1, +1]. When |columns|
// is empty the bindings are inferred from the header. A dimension with only
// one role present in a row gets 0 for the other role.
Lexicon ParseNumericLexicon(std::string_view text, std::string name,
                            const ColumnMap &columns = {},
                            std::optional<Dimension> generic_dimension = {});
Lexicon LoadNumericLexicon(const std::filesystem::path &path,
                           const ColumnMap &columns = {},
                           std::optional<Dimension> generic_dimension = {});

// Power/agency lexicon with labels power_agent|power_theme|power_equal and
// agency_pos|agency_neg|agency_equal; "absent" or an empty cell omits the
// dimension.
Lexicon ParseCategoricalLexicon(std::string_view text, std::string name);
Lexicon LoadCategoricalLexicon(const std::filesystem::path &path);

// Lexicon entries restricted to one dimension, indexed for lemma lookup.
class DimensionView {
 public:
  struct Entry {
    std::string key;
    std::string lemma;
    std::string particle;
    ScorePair scores;
  };

  DimensionView() = default;
  DimensionView(Dimension dimension, std::vector<Entry> entries);

  const Dimension &dimension() const { return dimension_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sorted by key.
  const std::vector<Entry> &entries() const { return entries_; }

  const Entry *Find(std::string_view key) const;

  // Entries whose head lemma is |lemma|: the plain entry first (if any), then
  // particle entries ordered by key.
  std::vector<const Entry *> Candidates(std::string_view lemma) const;

  // Canonical serialization: one "key<TAB>agent<TAB>theme" line per entry.
  std::string Serialize() const;

 private:
  Dimension dimension_;
  std::vector<Entry> entries_;
  std::map<std::string, std::vector<size_t>, std::less<>> by_lemma_;
};

// Throws Error(kEmptySelection) naming the available dimensions when no entry
// carries |dimension|.
DimensionView SelectDimension(const Lexicon &lexicon, const Dimension &dimension);

}  // namespace connoter

#endif  // CONNOTER_LEXICON_H_
