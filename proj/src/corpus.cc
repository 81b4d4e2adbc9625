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

#include "connoter/corpus.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "connoter/error.h"
#include "connoter/text.h"
#include "json.hpp"

namespace connoter {
namespace {

std::string At(const std::string &where, int line) {
  return where + ":" + std::to_string(line);
}

bool ParseInt(std::string_view text, int &value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Returns the value of a "# key = value" comment, or nullopt.
std::optional<std::string> CommentValue(std::string_view comment, std::string_view key) {
  comment = Trim(comment.substr(1));
  if (!StartsWith(comment, key)) return std::nullopt;
  std::string_view rest = Trim(comment.substr(key.size()));
  if (rest.empty()) return std::string();
  if (rest.front() != '=') return std::nullopt;
  return std::string(Trim(rest.substr(1)));
}

class ConlluParser {
 public:
  // |source| names the input in error messages.
  ConlluParser(const std::string &default_doc_id, const std::string &source)
      : default_doc_id_(default_doc_id), source_(source) {
    current_.doc_id = default_doc_id;
  }

  std::vector<ParsedDocument> Parse(std::string_view text) {
    int line_number = 0;
    for (std::string_view line : Split(text, '\n')) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (Trim(line).empty()) {
        FinishSentence();
      } else if (line.front() == '#') {
        Comment(line, line_number);
      } else {
        TokenLine(line, line_number);
      }
    }
    FinishSentence();
    FinishDocument();
    return std::move(docs_);
  }

 private:
  void Comment(std::string_view line, int line_number) {
    if (auto id = CommentValue(line, "newdoc id")) {
      StartDocument(*id, line_number);
    } else if (CommentValue(line, "newdoc")) {
      StartDocument(default_doc_id_ + "-" + std::to_string(docs_.size() + 1), line_number);
    } else if (auto sent_id = CommentValue(line, "sent_id")) {
      sentence_.sent_id = *sent_id;
    } else if (auto text = CommentValue(line, "text")) {
      sentence_.text = *text;
    } else {
      std::string_view body = Trim(line.substr(1));
      if (StartsWith(body, "meta::")) {
        body.remove_prefix(6);
        size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
          throw Error(ErrorCode::kFormat,
                      At(source_, line_number) + ": metadata line needs '='");
        }
        current_.metadata[std::string(Trim(body.substr(0, eq)))] =
            std::string(Trim(body.substr(eq + 1)));
      }
    }
  }

  void StartDocument(const std::string &doc_id, int line_number) {
    FinishSentence();
    if (current_.sentences.empty() && !started_) {
      current_.doc_id = doc_id;
    } else {
      FinishDocument();
      current_ = ParsedDocument{};
      current_.doc_id = doc_id;
    }
    if (doc_id.empty()) {
      throw Error(ErrorCode::kFormat, At(source_, line_number) + ": empty doc id");
    }
    started_ = true;
  }

  void TokenLine(std::string_view line, int line_number) {
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 10) {
      throw Error(ErrorCode::kFormat, At(source_, line_number) + ": expected 10 columns, found " +
                                          std::to_string(cols.size()));
    }
    // Multiword-token ranges and empty nodes.
    if (cols[0].find('-') != std::string_view::npos ||
        cols[0].find('.') != std::string_view::npos) {
      return;
    }
    Token token;
    if (!ParseInt(cols[0], token.index) ||
        token.index != static_cast<int>(sentence_.tokens.size()) + 1) {
      throw Error(ErrorCode::kFormat, At(source_, line_number) + ": bad token id '" +
                                          std::string(cols[0]) + "'");
    }
    if (!ParseInt(cols[6], token.head)) {
      throw Error(ErrorCode::kFormat, At(source_, line_number) + ": bad head '" +
                                          std::string(cols[6]) + "'");
    }
    token.surface = std::string(cols[1]);
    token.lemma = cols[2] == "_" ? ToLower(cols[1]) : ToLower(cols[2]);
    token.upos = std::string(cols[3]);
    token.xpos = std::string(cols[4]);
    token.feats = std::string(cols[5]);
    token.deprel = std::string(cols[7]);
    token.deps = std::string(cols[8]);
    if (token.deprel.empty() || token.deprel == "_") {
      throw Error(ErrorCode::kFormat, At(source_, line_number) + ": empty deprel");
    }
    std::string misc;
    if (cols[9] != "_") {
      for (std::string_view item : Split(cols[9], '|')) {
        if (StartsWith(item, "NER=")) {
          token.ner = std::string(item.substr(4));
          if (token.ner == "O" || token.ner == "_") token.ner.clear();
          continue;
        }
        if (!misc.empty()) misc += '|';
        misc += item;
      }
    }
    token.misc = misc.empty() ? "_" : misc;
    if (sentence_.tokens.empty()) first_line_ = line_number;
    sentence_.tokens.push_back(std::move(token));
  }

  void FinishSentence() {
    if (sentence_.tokens.empty()) {
      // Comments without tokens (e.g. trailing sent_id) are dropped.
      sentence_ = Sentence{};
      return;
    }
    std::string where = "document '" + current_.doc_id + "' sentence " +
                        std::to_string(current_.sentences.size() + 1) + " (line " +
                        std::to_string(first_line_) + ")";
    ValidateTree(sentence_, where);
    current_.sentences.push_back(std::move(sentence_));
    sentence_ = Sentence{};
  }

  void FinishDocument() {
    if (current_.sentences.empty()) {
      if (started_) {
        throw Error(ErrorCode::kFormat, "document '" + current_.doc_id + "' has no sentences");
      }
      return;
    }
    if (!seen_ids_.insert(current_.doc_id).second) {
      throw Error(ErrorCode::kConflict, "duplicate doc id '" + current_.doc_id + "'");
    }
    docs_.push_back(std::move(current_));
    current_ = ParsedDocument{};
    started_ = false;
  }

  std::string default_doc_id_;
  std::string source_;
  std::vector<ParsedDocument> docs_;
  ParsedDocument current_;
  Sentence sentence_;
  std::set<std::string> seen_ids_;
  bool started_ = false;
  int first_line_ = 0;
};

}  // namespace

void ValidateTree(const Sentence &sentence, const std::string &where) {
  const int n = sentence.size();
  int roots = 0;
  for (const Token &t : sentence.tokens) {
    if (t.head < 0 || t.head > n) {
      throw Error(ErrorCode::kTree, where + ": token " + std::to_string(t.index) +
                                        " has out-of-range head " + std::to_string(t.head));
    }
    if (t.head == t.index) {
      throw Error(ErrorCode::kTree,
                  where + ": token " + std::to_string(t.index) + " is its own head");
    }
    if (t.head == 0) ++roots;
  }
  if (roots != 1) {
    throw Error(ErrorCode::kTree,
                where + ": expected exactly one root, found " + std::to_string(roots));
  }
  for (const Token &t : sentence.tokens) {
    int cursor = t.index;
    for (int steps = 0; cursor != 0; ++steps) {
      if (steps > n) {
        throw Error(ErrorCode::kTree, where + ": cycle through token " +
                                          std::to_string(t.index));
      }
      cursor = sentence.at(cursor).head;
    }
  }
}

std::vector<ParsedDocument> ParseConllu(std::string_view text,
                                        const std::string &default_doc_id) {
  return ConlluParser(default_doc_id, default_doc_id).Parse(text);
}

void ApplyEntitySidecar(std::string_view json_text, std::vector<ParsedDocument> &docs) {
  nlohmann::json spans;
  try {
    spans = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kFormat, std::string("entity sidecar: ") + e.what());
  }
  if (!spans.is_array()) throw Error(ErrorCode::kFormat, "entity sidecar must be a JSON array");

  for (ParsedDocument &doc : docs) {
    for (Sentence &s : doc.sentences) {
      for (Token &t : s.tokens) t.ner.clear();
    }
  }
  for (const nlohmann::json &span : spans) {
    try {
      const std::string doc_id = span.at("doc_id").get<std::string>();
      const int sentence = span.at("sentence").get<int>();
      const int start = span.at("start").get<int>();
      const int end = span.at("end").get<int>();
      const std::string label = span.at("label").get<std::string>();
      auto doc = std::find_if(docs.begin(), docs.end(),
                              [&](const ParsedDocument &d) { return d.doc_id == doc_id; });
      if (doc == docs.end()) {
        throw Error(ErrorCode::kFormat, "entity sidecar: unknown doc_id '" + doc_id + "'");
      }
      if (sentence < 0 || sentence >= static_cast<int>(doc->sentences.size())) {
        throw Error(ErrorCode::kFormat, "entity sidecar: sentence " +
                                            std::to_string(sentence) + " out of range in '" +
                                            doc_id + "'");
      }
      Sentence &s = doc->sentences[static_cast<size_t>(sentence)];
      if (start < 1 || end < start || end > s.size()) {
        throw Error(ErrorCode::kFormat, "entity sidecar: span " + std::to_string(start) + "-" +
                                            std::to_string(end) + " out of range in '" +
                                            doc_id + "'");
      }
      for (int i = start; i <= end; ++i) {
        s.tokens[static_cast<size_t>(i - 1)].ner = (i == start ? "B-" : "I-") + label;
      }
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kFormat, std::string("entity sidecar: ") + e.what());
    }
  }
}

std::vector<ParsedDocument> LoadConllu(const std::filesystem::path &path) {
  std::vector<ParsedDocument> docs =
      ConlluParser(path.stem().string(), path.filename().string()).Parse(ReadTextFile(path));
  std::filesystem::path sidecar = path.parent_path() / (path.stem().string() + ".entities.json");
  if (std::filesystem::exists(sidecar)) {
    ApplyEntitySidecar(ReadTextFile(sidecar), docs);
  }
  return docs;
}

std::vector<ParsedDocument> LoadCorpus(std::span<const std::filesystem::path> paths) {
  std::vector<std::filesystem::path> files;
  for (const auto &path : paths) {
    if (std::filesystem::is_directory(path)) {
      std::vector<std::filesystem::path> found;
      for (const auto &entry : std::filesystem::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".conllu") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (std::filesystem::exists(path)) {
      files.push_back(path);
    } else {
      throw Error(ErrorCode::kIo, "no such file or directory: " + path.string());
    }
  }
  std::vector<ParsedDocument> corpus;
  for (const auto &file : files) {
    std::vector<ParsedDocument> docs = LoadConllu(file);
    std::move(docs.begin(), docs.end(), std::back_inserter(corpus));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const ParsedDocument &a, const ParsedDocument &b) { return a.doc_id < b.doc_id; });
  for (size_t i = 1; i < corpus.size(); ++i) {
    if (corpus[i].doc_id == corpus[i - 1].doc_id) {
      throw Error(ErrorCode::kConflict, "duplicate doc id '" + corpus[i].doc_id + "'");
    }
  }
  return corpus;
}

std::string SerializeConllu(std::span<const ParsedDocument> docs) {
  std::string out;
  for (const ParsedDocument &doc : docs) {
    out += "# newdoc id = " + doc.doc_id + "\n";
    for (const auto &[key, value] : doc.metadata) {
      out += "# meta::" + key + " = " + value + "\n";
    }
    for (const Sentence &s : doc.sentences) {
      if (!s.sent_id.empty()) out += "# sent_id = " + s.sent_id + "\n";
      if (!s.text.empty()) out += "# text = " + s.text + "\n";
      for (const Token &t : s.tokens) {
        std::string misc = t.misc;
        if (!t.ner.empty()) {
          misc = (misc == "_" ? "" : misc + "|") + "NER=" + t.ner;
        }
        out += std::to_string(t.index) + "\t" + t.surface + "\t" + t.lemma + "\t" + t.upos +
               "\t" + t.xpos + "\t" + t.feats + "\t" + std::to_string(t.head) + "\t" +
               t.deprel + "\t" + t.deps + "\t" + misc + "\n";
      }
      out += "\n";
    }
  }
  return out;
}

CorpusStats ComputeCorpusStats(std::span<const ParsedDocument> corpus) {
  CorpusStats stats;
  stats.documents = corpus.size();
  for (const ParsedDocument &doc : corpus) {
    stats.sentences += doc.sentences.size();
    for (const Sentence &s : doc.sentences) {
      stats.tokens += s.tokens.size();
      for (const Token &t : s.tokens) {
        if (t.upos == "VERB" || t.upos == "AUX") ++stats.verb_tokens;
      }
    }
  }
  return stats;
}

}  // namespace connoter
