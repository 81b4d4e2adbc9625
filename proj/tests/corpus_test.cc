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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "connoter/corpus.h"
#include "test_util.h"

namespace connoter {
namespace {

namespace fs = std::filesystem;
using testing::TestData;
using testing::ThrownCode;

std::string Line(int id, const std::string &form, const std::string &lemma,
                 const std::string &upos, int head, const std::string &rel,
                 const std::string &misc = "_") {
  return std::to_string(id) + "\t" + form + "\t" + lemma + "\t" + upos + "\t_\t_\t" +
         std::to_string(head) + "\t" + rel + "\t_\t" + misc + "\n";
}

const std::string kTwoTokens = Line(1, "She", "she", "PRON", 2, "nsubj") +
                               Line(2, "left", "leave", "VERB", 0, "root") + "\n";

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("connoter_corpus_" + std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }
  void Write(const std::string &name, const std::string &text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
  }

 private:
  fs::path path_;
};

TEST(ParseConllu, ReadsTokensMetadataAndNer) {
  std::string text = "# newdoc id = d1\n# meta::high = Alan\n# sent_id = s1\n# text = Alan left\n" +
                     Line(1, "Alan", "Alan", "PROPN", 2, "nsubj", "NER=B-PERSON|SpaceAfter=No") +
                     Line(2, "left", "leave", "VERB", 0, "root") + "\n";
  auto docs = ParseConllu(text, "fallback");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].doc_id, "d1");
  EXPECT_EQ(docs[0].metadata.at("high"), "Alan");
  const Sentence &s = docs[0].sentences.at(0);
  EXPECT_EQ(s.sent_id, "s1");
  EXPECT_EQ(s.text, "Alan left");
  EXPECT_EQ(s.at(1).ner, "B-PERSON");
  EXPECT_EQ(s.at(1).misc, "SpaceAfter=No");
  EXPECT_EQ(s.at(2).misc, "_");
  EXPECT_EQ(s.at(2).head, 0);
}

TEST(ParseConllu, FileWithoutMarkerUsesDefaultId) {
  auto docs = ParseConllu(kTwoTokens, "stem");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].doc_id, "stem");
}

TEST(ParseConllu, SkipsMultiwordRangesAndEmptyNodes) {
  std::string text = "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n" + Line(1, "do", "do", "AUX", 3, "aux") +
                     Line(2, "n't", "not", "PART", 3, "advmod") + "2.1\tx\tx\tX\t_\t_\t_\t_\t_\t_\n" +
                     Line(3, "go", "go", "VERB", 0, "root") + "\n";
  auto docs = ParseConllu(text, "d");
  EXPECT_EQ(docs[0].sentences[0].size(), 3);
}

TEST(ParseConllu, UnderscoreLemmaFallsBackToLowercasedForm) {
  auto docs = ParseConllu(Line(1, "Ran", "_", "VERB", 0, "root") + "\n", "d");
  EXPECT_EQ(docs[0].sentences[0].at(1).lemma, "ran");
}

TEST(ParseConllu, WrongColumnCountNamesLine) {
  std::string msg;
  auto code = ThrownCode(
      [] { ParseConllu("# c\n1\tShe\tshe\tPRON\t_\t_\t0\troot\t_\n\n", "d"); }, &msg);
  EXPECT_EQ(code, ErrorCode::kFormat);
  EXPECT_NE(msg.find("d:2"), std::string::npos) << msg;
}

TEST(ParseConllu, RejectsMalformedTrees) {
  // Head out of range.
  EXPECT_EQ(ThrownCode([] { ParseConllu(Line(1, "a", "a", "X", 5, "root") + "\n", "d"); }),
            ErrorCode::kTree);
  // Two roots.
  EXPECT_EQ(ThrownCode([] {
              ParseConllu(Line(1, "a", "a", "X", 0, "root") + Line(2, "b", "b", "X", 0, "root") +
                              "\n",
                          "d");
            }),
            ErrorCode::kTree);
  // Cycle detached from the root.
  EXPECT_EQ(ThrownCode([] {
              ParseConllu(Line(1, "a", "a", "X", 0, "root") + Line(2, "b", "b", "X", 3, "dep") +
                              Line(3, "c", "c", "X", 2, "dep") + "\n",
                          "d");
            }),
            ErrorCode::kTree);
  // Self-loop.
  EXPECT_EQ(ThrownCode([] {
              ParseConllu(Line(1, "a", "a", "X", 0, "root") + Line(2, "b", "b", "X", 2, "dep") +
                              "\n",
                          "d");
            }),
            ErrorCode::kTree);
}

TEST(ParseConllu, RejectsBadIdsAndLabels) {
  EXPECT_EQ(ThrownCode([] {
              ParseConllu(Line(1, "a", "a", "X", 0, "root") + Line(3, "b", "b", "X", 1, "dep") +
                              "\n",
                          "d");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] { ParseConllu(Line(1, "a", "a", "X", 0, "_") + "\n", "d"); }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] {
              ParseConllu("1\ta\ta\tX\t_\t_\tzero\troot\t_\t_\n\n", "d");
            }),
            ErrorCode::kFormat);
}

TEST(ParseConllu, EmptyAndDuplicateDocuments) {
  EXPECT_EQ(ThrownCode([] { ParseConllu("# newdoc id = a\n# newdoc id = b\n" + kTwoTokens, "d"); }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] {
              ParseConllu("# newdoc id = a\n" + kTwoTokens + "# newdoc id = a\n" + kTwoTokens, "d");
            }),
            ErrorCode::kConflict);
}

TEST(ParseConllu, AcceptsCrlfAndMissingFinalBlankLine) {
  std::string text = "1\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\r\n";
  auto docs = ParseConllu(text, "d");
  ASSERT_EQ(docs[0].sentences.size(), 1u);
  EXPECT_EQ(docs[0].sentences[0].at(1).deprel, "root");
}

TEST(SerializeConllu, RoundTripsFixtures) {
  for (const char *name : {"story_1.conllu", "story_2.conllu", "story_3.conllu", "sherlock.conllu",
                           "pride.conllu", "extraction25.conllu"}) {
    auto docs = LoadConllu(TestData(name));
    std::string text = SerializeConllu(docs);
    auto again = ParseConllu(text, "unused");
    EXPECT_EQ(again, docs) << name;
    EXPECT_EQ(SerializeConllu(again), text) << name;
  }
}

TEST(LoadConllu, SidecarReplacesMiscNer) {
  TempDir dir;
  dir.Write("doc.conllu", Line(1, "Mary", "Mary", "PROPN", 2, "nsubj", "NER=B-PERSON") +
                              Line(2, "met", "meet", "VERB", 0, "root") +
                              Line(3, "Bob", "Bob", "PROPN", 2, "obj") + "\n");
  dir.Write("doc.entities.json",
            R"([{"doc_id": "doc", "sentence": 0, "start": 3, "end": 3, "label": "PERSON"}])");
  auto docs = LoadConllu(dir.path() / "doc.conllu");
  EXPECT_EQ(docs[0].sentences[0].at(1).ner, "");
  EXPECT_EQ(docs[0].sentences[0].at(3).ner, "B-PERSON");

  dir.Write("doc.entities.json",
            R"([{"doc_id": "doc", "sentence": 1, "start": 1, "end": 1, "label": "PERSON"}])");
  EXPECT_EQ(ThrownCode([&] { LoadConllu(dir.path() / "doc.conllu"); }), ErrorCode::kFormat);
}

TEST(LoadCorpus, DirectoryScanSortsByDocIdAndRejectsDuplicates) {
  TempDir dir;
  dir.Write("b.conllu", kTwoTokens);
  dir.Write("a.conllu", "# newdoc id = z\n" + kTwoTokens + "# newdoc id = c\n" + kTwoTokens);
  dir.Write("ignored.txt", "not conllu");
  std::vector<fs::path> paths = {dir.path()};
  auto corpus = LoadCorpus(paths);
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus[0].doc_id, "b");
  EXPECT_EQ(corpus[1].doc_id, "c");
  EXPECT_EQ(corpus[2].doc_id, "z");

  dir.Write("z.conllu", kTwoTokens);
  EXPECT_EQ(ThrownCode([&] { LoadCorpus(paths); }), ErrorCode::kConflict);
}

TEST(LoadCorpus, EmptyDirectoryYieldsNothingAndMissingPathFails) {
  TempDir dir;
  std::vector<fs::path> paths = {dir.path()};
  EXPECT_TRUE(LoadCorpus(paths).empty());
  std::vector<fs::path> missing = {dir.path() / "nope.conllu"};
  EXPECT_EQ(ThrownCode([&] { LoadCorpus(missing); }), ErrorCode::kIo);
}

TEST(LoadCorpus, InvalidUtf8IsAnEncodingError) {
  TempDir dir;
  dir.Write("bad.conllu", "1\tcaf\xe9\tcafe\tNOUN\t_\t_\t0\troot\t_\t_\n\n");
  EXPECT_EQ(ThrownCode([&] { LoadConllu(dir.path() / "bad.conllu"); }), ErrorCode::kEncoding);
}

TEST(CorpusStats, CountsVerbAndAuxTokens) {
  auto docs = LoadConllu(TestData("sherlock.conllu"));
  CorpusStats stats = ComputeCorpusStats(docs);
  EXPECT_EQ(stats.documents, 1u);
  EXPECT_EQ(stats.sentences, 3u);
  EXPECT_EQ(stats.tokens, 9u + 10u + 8u);
  EXPECT_EQ(stats.verb_tokens, 4u);  // beckons, steps, trapping, slices
}

}  // namespace
}  // namespace connoter
