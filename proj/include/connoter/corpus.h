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

#ifndef CONNOTER_CORPUS_H_
#define CONNOTER_CORPUS_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace connoter {

// One CoNLL-U word line. Multiword-token ranges and empty nodes are not
// represented.
struct Token {
  int index = 0;  // 1-based within the sentence
  std::string surface;
  std::string lemma;  // lowercase
  std::string upos;
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;  // 0 = root
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";  // MISC without the NER= item
  std::string ner;         // BIO tag, empty when untagged

  bool IsVerb() const { return upos == "VERB"; }

  bool operator==(const Token &) const = default;
};

struct Sentence {
  std::string sent_id;
  std::string text;
  std::vector<Token> tokens;

  // Token by 1-based index.
  const Token &at(int index) const { return tokens[static_cast<size_t>(index - 1)]; }
  int size() const { return static_cast<int>(tokens.size()); }

  bool operator==(const Sentence &) const = default;
};

struct ParsedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::map<std::string, std::string> metadata;

  bool operator==(const ParsedDocument &) const = default;
};

struct CorpusStats {
  size_t documents = 0;
  size_t sentences = 0;
  size_t tokens = 0;
  size_t verb_tokens = 0;  // upos VERB or AUX

  bool operator==(const CorpusStats &) const = default;
};

// Parses CoNLL-U text. Documents start at "# newdoc id = ..."; text before
// the first marker (or a file with none) forms one document named
// |default_doc_id|. "# meta::key = value" lines populate the current
// document's metadata. NER tags come from MISC "NER=<tag>".
//
// Throws Error(kFormat) for malformed lines and Error(kTree) for head
// structures that are not a single tree rooted at 0. Nothing is returned on
// failure.
std::vector<ParsedDocument> ParseConllu(std::string_view text,
                                        const std::string &default_doc_id);

// Reads |path| and, when present, the sidecar "<stem>.entities.json" whose
// spans replace any MISC NER tags. Parse errors name the file ("a.conllu:12").
std::vector<ParsedDocument> LoadConllu(const std::filesystem::path &path);

// Loads every *.conllu file under the given files/directories (directories
// are scanned non-recursively, in filename order) and sorts the result by
// doc_id. Throws Error(kConflict) on duplicate doc ids.
std::vector<ParsedDocument> LoadCorpus(std::span<const std::filesystem::path> paths);

// Applies entity spans from a sidecar JSON document:
//   [{"doc_id": "...", "sentence": 0, "start": 1, "end": 2, "label": "PERSON"}]
// |sentence| is 0-based, |start|/|end| are inclusive 1-based token indices.
void ApplyEntitySidecar(std::string_view json_text, std::vector<ParsedDocument> &docs);

std::string SerializeConllu(std::span<const ParsedDocument> docs);

CorpusStats ComputeCorpusStats(std::span<const ParsedDocument> corpus);

// Throws Error(kTree) naming |where| if |sentence| is not a single-rooted tree.
void ValidateTree(const Sentence &sentence, const std::string &where);

}  // namespace connoter

#endif  // CONNOTER_CORPUS_H_
