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

#include "connoter/lexicon.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "connoter/error.h"
#include "connoter/text.h"

namespace connoter {
namespace {

constexpr std::pair<DimensionName, const char *> kDimensionNames[] = {
    {DimensionName::kEffect, "effect"},       {DimensionName::kValue, "value"},
    {DimensionName::kState, "state"},         {DimensionName::kPerspective, "perspective"},
    {DimensionName::kPower, "power"},         {DimensionName::kAgency, "agency"},
};

constexpr const char *kPerspectiveVariants[] = {"mutual", "writer", "reader"};

const char *DimensionNameString(DimensionName name) {
  for (const auto &[value, text] : kDimensionNames) {
    if (value == name) return text;
  }
  return "?";
}

std::optional<DimensionName> LookupDimensionName(std::string_view text) {
  for (const auto &[value, name] : kDimensionNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

// One data row of a delimited lexicon file.
struct Row {
  int line = 0;
  std::vector<std::string> cells;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

Table ParseTable(std::string_view text, const std::string &name) {
  Table table;
  char delimiter = '\t';
  int line_number = 0;
  bool have_header = false;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view trimmed = Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (!have_header) {
      delimiter = raw.find('\t') != std::string_view::npos ? '\t' : ',';
      for (std::string_view cell : Split(raw, delimiter)) {
        table.header.push_back(ToLower(Trim(cell)));
      }
      have_header = true;
      continue;
    }
    Row row;
    row.line = line_number;
    for (std::string_view cell : Split(raw, delimiter)) {
      row.cells.emplace_back(Trim(cell));
    }
    if (row.cells.size() != table.header.size()) {
      throw Error(ErrorCode::kFormat,
                  name + ":" + std::to_string(line_number) + ": expected " +
                      std::to_string(table.header.size()) + " columns, found " +
                      std::to_string(row.cells.size()));
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorCode::kFormat, name + ": missing header row");
  return table;
}

size_t VerbColumn(const Table &table, const std::string &name) {
  auto it = std::find(table.header.begin(), table.header.end(), "verb");
  if (it == table.header.end()) {
    throw Error(ErrorCode::kFormat, name + ": header has no 'verb' column");
  }
  return static_cast<size_t>(it - table.header.begin());
}

// Case-folds and splits "Step  In" into key "step in", lemma "step",
// particle "in".
VerbEntry MakeEntry(std::string_view raw_key, const std::string &name, int line) {
  VerbEntry entry;
  std::vector<std::string_view> words = SplitWhitespace(raw_key);
  if (words.empty()) {
    throw Error(ErrorCode::kFormat,
                name + ":" + std::to_string(line) + ": empty verb");
  }
  entry.lemma = ToLower(words[0]);
  for (size_t i = 1; i < words.size(); ++i) {
    if (i > 1) entry.particle += ' ';
    entry.particle += ToLower(words[i]);
  }
  entry.key = entry.particle.empty() ? entry.lemma : entry.lemma + " " + entry.particle;
  return entry;
}

std::string FormatScores(const VerbEntry &entry) {
  std::string out;
  for (const auto &[dim, pair] : entry.scores) {
    if (!out.empty()) out += ", ";
    out += dim.ToString() + "=(" + FormatFixed(pair.agent, 3) + ", " +
           FormatFixed(pair.theme, 3) + ")";
  }
  return out.empty() ? "(no scores)" : out;
}

Lexicon Finish(std::string name, LexiconFormat format,
               std::vector<std::pair<VerbEntry, int>> parsed) {
  std::map<std::string, VerbEntry> entries;
  std::map<std::string, int> first_line;
  for (auto &[entry, line] : parsed) {
    auto it = entries.find(entry.key);
    if (it == entries.end()) {
      first_line[entry.key] = line;
      entries.emplace(entry.key, std::move(entry));
      continue;
    }
    if (it->second == entry) continue;
    throw Error(ErrorCode::kConflict,
                name + ": conflicting rows for verb '" + entry.key + "': line " +
                    std::to_string(first_line[entry.key]) + " " +
                    FormatScores(it->second) + " vs line " + std::to_string(line) +
                    " " + FormatScores(entry));
  }
  if (entries.empty()) throw Error(ErrorCode::kFormat, name + ": lexicon has no entries");
  return Lexicon(std::move(name), format, std::move(entries));
}

std::optional<ColumnBinding> ParenthesizedColumn(std::string_view header) {
  // "effect(s)" -> effect/agent; "perspective(wo)" -> perspective:writer/theme.
  size_t open = header.find('(');
  if (open == std::string_view::npos || header.back() != ')') return std::nullopt;
  std::string_view base = header.substr(0, open);
  std::string_view code = header.substr(open + 1, header.size() - open - 2);
  auto name = LookupDimensionName(base);
  if (!name) return std::nullopt;
  if (*name == DimensionName::kPerspective) {
    if (code == "ws") return ColumnBinding{{*name, "writer"}, Role::kAgent};
    if (code == "wo") return ColumnBinding{{*name, "writer"}, Role::kTheme};
    if (code == "rs") return ColumnBinding{{*name, "reader"}, Role::kAgent};
    if (code == "ro") return ColumnBinding{{*name, "reader"}, Role::kTheme};
    // Sentiment of the theme toward the agent scores the agent, and vice versa.
    if (code == "os") return ColumnBinding{{*name, "mutual"}, Role::kAgent};
    if (code == "so") return ColumnBinding{{*name, "mutual"}, Role::kTheme};
    return std::nullopt;
  }
  if (*name == DimensionName::kPower || *name == DimensionName::kAgency) return std::nullopt;
  if (code == "s") return ColumnBinding{{*name, ""}, Role::kAgent};
  if (code == "o") return ColumnBinding{{*name, ""}, Role::kTheme};
  return std::nullopt;
}

std::optional<ColumnBinding> SuffixColumn(std::string_view header) {
  Role role;
  if (header.ends_with("_agent")) {
    role = Role::kAgent;
    header.remove_suffix(6);
  } else if (header.ends_with("_theme")) {
    role = Role::kTheme;
    header.remove_suffix(6);
  } else {
    return std::nullopt;
  }
  try {
    std::string dimension_text(header);
    size_t underscore = dimension_text.find('_');
    if (underscore != std::string::npos) dimension_text[underscore] = ':';
    return ColumnBinding{Dimension::Parse(dimension_text), role};
  } catch (const Error &) {
    return std::nullopt;
  }
}

double ParseScore(const std::string &cell, const std::string &column,
                  const std::string &name, int line) {
  std::string_view text = cell;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kFormat, name + ":" + std::to_string(line) +
                                        ": cannot parse score '" + cell +
                                        "' in column '" + column + "'");
  }
  if (value < -1.0 || value > 1.0) {
    throw Error(ErrorCode::kRange, name + ":" + std::to_string(line) + ": score " +
                                       cell + " in column '" + column +
                                       "' is outside [-1, +1]");
  }
  return value;
}

}  // namespace

const char *RoleName(Role role) { return role == Role::kAgent ? "agent" : "theme"; }

const char *RolePosition(Role role) { return role == Role::kAgent ? "nsubj" : "dobj"; }

std::string Dimension::ToString() const {
  std::string out = DimensionNameString(name);
  if (!variant.empty()) out += ":" + variant;
  return out;
}

Dimension Dimension::Parse(std::string_view text) {
  std::string folded = ToLower(Trim(text));
  std::string_view base = folded;
  std::string_view variant;
  if (size_t colon = folded.find(':'); colon != std::string::npos) {
    base = std::string_view(folded).substr(0, colon);
    variant = std::string_view(folded).substr(colon + 1);
  }
  auto name = LookupDimensionName(base);
  if (!name) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown dimension '" + std::string(text) +
                    "' (expected effect, value, state, perspective[:mutual|writer|reader], "
                    "power, agency)");
  }
  Dimension dim{*name, std::string(variant)};
  if (*name == DimensionName::kPerspective) {
    if (variant.empty()) dim.variant = "mutual";
    if (std::find(std::begin(kPerspectiveVariants), std::end(kPerspectiveVariants),
                  dim.variant) == std::end(kPerspectiveVariants)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown perspective variant '" + dim.variant + "'");
    }
  } else if (!variant.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension '" + std::string(base) + "' takes no variant");
  }
  return dim;
}

Lexicon::Lexicon(std::string name, LexiconFormat format,
                 std::map<std::string, VerbEntry> entries)
    : name_(std::move(name)), format_(format), entries_(std::move(entries)) {}

const VerbEntry *Lexicon::Find(std::string_view key) const {
  auto it = entries_.find(ToLower(key));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Dimension> Lexicon::Dimensions() const {
  std::vector<Dimension> dims;
  for (const auto &[key, entry] : entries_) {
    for (const auto &[dim, pair] : entry.scores) dims.push_back(dim);
  }
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  return dims;
}

ColumnMap InferNumericColumns(const std::vector<std::string> &header,
                              std::optional<Dimension> generic_dimension) {
  ColumnMap columns;
  for (const std::string &raw : header) {
    std::string column = ToLower(raw);
    if (column == "verb") continue;
    if (column == "agent_score" || column == "theme_score") {
      if (!generic_dimension) {
        throw Error(ErrorCode::kFormat,
                    "column '" + column + "' needs an explicit dimension");
      }
      columns[column] = {*generic_dimension,
                         column == "agent_score" ? Role::kAgent : Role::kTheme};
      continue;
    }
    if (auto binding = ParenthesizedColumn(column)) {
      columns[column] = *binding;
    } else if (auto suffixed = SuffixColumn(column)) {
      columns[column] = *suffixed;
    } else {
      throw Error(ErrorCode::kFormat, "unrecognized lexicon column '" + raw + "'");
    }
  }
  if (columns.empty()) throw Error(ErrorCode::kFormat, "lexicon header has no score columns");
  return columns;
}

Lexicon ParseNumericLexicon(std::string_view text, std::string name,
                            const ColumnMap &columns,
                            std::optional<Dimension> generic_dimension) {
  Table table = ParseTable(text, name);
  const size_t verb_col = VerbColumn(table, name);

  ColumnMap bindings;
  if (columns.empty()) {
    bindings = InferNumericColumns(table.header, generic_dimension);
  } else {
    for (const auto &[column, binding] : columns) bindings[ToLower(column)] = binding;
  }
  std::vector<std::pair<size_t, ColumnBinding>> score_cols;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i == verb_col) continue;
    auto it = bindings.find(table.header[i]);
    if (it == bindings.end()) {
      throw Error(ErrorCode::kFormat,
                  name + ": column '" + table.header[i] + "' has no dimension binding");
    }
    score_cols.emplace_back(i, it->second);
  }

  std::vector<std::pair<VerbEntry, int>> parsed;
  for (const Row &row : table.rows) {
    VerbEntry entry = MakeEntry(row.cells[verb_col], name, row.line);
    for (const auto &[col, binding] : score_cols) {
      const std::string &cell = row.cells[col];
      if (cell.empty()) continue;
      double score = ParseScore(cell, table.header[col], name, row.line);
      // operator[] zero-fills the other role on first touch.
      ScorePair &pair = entry.scores[binding.dimension];
      (binding.role == Role::kAgent ? pair.agent : pair.theme) = score;
    }
    parsed.emplace_back(std::move(entry), row.line);
  }
  return Finish(std::move(name), LexiconFormat::kNumeric, std::move(parsed));
}

Lexicon LoadNumericLexicon(const std::filesystem::path &path, const ColumnMap &columns,
                           std::optional<Dimension> generic_dimension) {
  return ParseNumericLexicon(ReadTextFile(path), path.filename().string(), columns,
                             generic_dimension);
}

Lexicon ParseCategoricalLexicon(std::string_view text, std::string name) {
  Table table = ParseTable(text, name);
  const size_t verb_col = VerbColumn(table, name);
  std::optional<size_t> power_col, agency_col;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == "power") {
      power_col = i;
    } else if (table.header[i] == "agency") {
      agency_col = i;
    } else if (i != verb_col) {
      throw Error(ErrorCode::kFormat,
                  name + ": unexpected categorical column '" + table.header[i] + "'");
    }
  }
  if (!power_col && !agency_col) {
    throw Error(ErrorCode::kFormat, name + ": header needs a 'power' or 'agency' column");
  }

  const Dimension power{DimensionName::kPower, ""};
  const Dimension agency{DimensionName::kAgency, ""};
  auto unknown = [&](const std::string &label, int line, const char *column) {
    return Error(ErrorCode::kUnknownLabel, name + ":" + std::to_string(line) +
                                               ": unknown " + column + " label '" +
                                               label + "'");
  };

  std::vector<std::pair<VerbEntry, int>> parsed;
  for (const Row &row : table.rows) {
    VerbEntry entry = MakeEntry(row.cells[verb_col], name, row.line);
    if (power_col) {
      const std::string label = ToLower(row.cells[*power_col]);
      if (label == "power_agent") {
        entry.scores[power] = {PolarityScore(Polarity::kPositive),
                               PolarityScore(Polarity::kNegative)};
      } else if (label == "power_theme") {
        entry.scores[power] = {PolarityScore(Polarity::kNegative),
                               PolarityScore(Polarity::kPositive)};
      } else if (label == "power_equal") {
        entry.scores[power] = {0.0, 0.0};
      } else if (!label.empty() && label != "absent") {
        throw unknown(row.cells[*power_col], row.line, "power");
      }
    }
    if (agency_col) {
      // Agency is annotated for the agent only; the theme side stays 0.
      const std::string label = ToLower(row.cells[*agency_col]);
      if (label == "agency_pos") {
        entry.scores[agency] = {PolarityScore(Polarity::kPositive), 0.0};
      } else if (label == "agency_neg") {
        entry.scores[agency] = {PolarityScore(Polarity::kNegative), 0.0};
      } else if (label == "agency_equal") {
        entry.scores[agency] = {0.0, 0.0};
      } else if (!label.empty() && label != "absent") {
        throw unknown(row.cells[*agency_col], row.line, "agency");
      }
    }
    parsed.emplace_back(std::move(entry), row.line);
  }
  return Finish(std::move(name), LexiconFormat::kCategorical, std::move(parsed));
}

Lexicon LoadCategoricalLexicon(const std::filesystem::path &path) {
  return ParseCategoricalLexicon(ReadTextFile(path), path.filename().string());
}

DimensionView::DimensionView(Dimension dimension, std::vector<Entry> entries)
    : dimension_(std::move(dimension)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry &a, const Entry &b) { return a.key < b.key; });
  for (size_t i = 0; i < entries_.size(); ++i) {
    by_lemma_[entries_[i].lemma].push_back(i);
  }
  // Plain entry first, then particle entries by key.
  for (auto &[lemma, indices] : by_lemma_) {
    std::stable_sort(indices.begin(), indices.end(), [this](size_t a, size_t b) {
      return entries_[a].particle.empty() && !entries_[b].particle.empty();
    });
  }
}

const DimensionView::Entry *DimensionView::Find(std::string_view key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry &e, std::string_view k) { return e.key < k; });
  if (it == entries_.end() || it->key != key) return nullptr;
  return &*it;
}

std::vector<const DimensionView::Entry *> DimensionView::Candidates(
    std::string_view lemma) const {
  std::vector<const Entry *> out;
  auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return out;
  for (size_t index : it->second) out.push_back(&entries_[index]);
  return out;
}

std::string DimensionView::Serialize() const {
  std::string out = "# dimension " + dimension_.ToString() + "\n";
  for (const Entry &e : entries_) {
    out += e.key + "\t" + FormatFixed(e.scores.agent, 6) + "\t" +
           FormatFixed(e.scores.theme, 6) + "\n";
  }
  return out;
}

DimensionView SelectDimension(const Lexicon &lexicon, const Dimension &dimension) {
  std::vector<DimensionView::Entry> entries;
  for (const auto &[key, entry] : lexicon.entries()) {
    auto it = entry.scores.find(dimension);
    if (it == entry.scores.end()) continue;
    entries.push_back({entry.key, entry.lemma, entry.particle, it->second});
  }
  if (entries.empty()) {
    std::vector<std::string> available;
    for (const Dimension &d : lexicon.Dimensions()) available.push_back(d.ToString());
    throw Error(ErrorCode::kEmptySelection,
                "lexicon '" + lexicon.name() + "' has no entries for dimension '" +
                    dimension.ToString() + "'; available: " + JoinNames(available));
  }
  return DimensionView(dimension, std::move(entries));
}

}  // namespace connoter
