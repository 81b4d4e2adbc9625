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

#include <set>
#include <string>

#include "connoter/entities.h"
#include "test_util.h"

namespace connoter {
namespace {

using testing::Conllu;
using testing::DefaultResources;
using testing::ParseOne;
using testing::TestData;
using testing::ThrownCode;

// Cluster name owning the mention that covers (sentence, token).
std::string ClusterAt(const DocumentEntities &e, int sentence, int token) {
  auto m = e.MentionAt(sentence, token);
  if (!m) return "<none>";
  return e.clusters[e.mention_cluster[*m]].canonical_name;
}

const std::string kAlanHe = Conllu({{"Alan", "Alan", "PROPN", 2, "nsubj", "B-PERSON"},
                                    {"left", "leave", "VERB", 0, "root"}}) +
                            Conllu({{"He", "he", "PRON", 2, "nsubj"},
                                    {"returned", "return", "VERB", 0, "root"}});

TEST(Pronouns, ClassTable) {
  for (const char *p : {"he", "him", "his", "himself"}) {
    EXPECT_EQ(ClassifyPronoun(p), PronounClass::kMasculine) << p;
  }
  for (const char *p : {"she", "her", "hers", "herself"}) {
    EXPECT_EQ(ClassifyPronoun(p), PronounClass::kFeminine) << p;
  }
  for (const char *p : {"they", "them", "their", "themselves"}) {
    EXPECT_EQ(ClassifyPronoun(p), PronounClass::kUnmarked) << p;
  }
  for (const char *p : {"i", "me", "you", "we", "us"}) {
    EXPECT_EQ(ClassifyPronoun(p), PronounClass::kDiscourse) << p;
  }
  EXPECT_FALSE(ClassifyPronoun("it").has_value());
}

TEST(Clusters, PronounJoinsPrecedingName) {
  DocumentEntities e = AnalyzeEntities(ParseOne(kAlanHe), DefaultResources());
  ASSERT_EQ(e.clusters.size(), 1u);
  EXPECT_EQ(e.clusters[0].canonical_name, "Alan");
  EXPECT_EQ(e.clusters[0].mentions.size(), 2u);
}

TEST(Clusters, PronounBeyondWindowStaysSingleton) {
  std::string text = Conllu({{"Alan", "Alan", "PROPN", 2, "nsubj", "B-PERSON"},
                             {"left", "leave", "VERB", 0, "root"}}) +
                     Conllu({{"It", "it", "PRON", 2, "nsubj"}, {"rained", "rain", "VERB", 0, "root"}}) +
                     Conllu({{"He", "he", "PRON", 2, "nsubj"},
                             {"returned", "return", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 0, 1), "Alan");
  EXPECT_EQ(ClusterAt(e, 2, 1), "he");
}

TEST(Clusters, GenderMismatchBlocksAttachment) {
  std::string text = Conllu({{"Mary", "Mary", "PROPN", 2, "nsubj", "B-PERSON"},
                             {"left", "leave", "VERB", 0, "root"}}) +
                     Conllu({{"He", "he", "PRON", 2, "nsubj"},
                             {"returned", "return", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 1, 1), "he");
}

TEST(Clusters, UnknownGenderNameAcceptsAnyPronoun) {
  std::string text = Conllu({{"Quill", "Quill", "PROPN", 2, "nsubj", "B-PERSON"},
                             {"left", "leave", "VERB", 0, "root"}}) +
                     Conllu({{"She", "she", "PRON", 2, "nsubj"},
                             {"returned", "return", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 1, 1), "Quill");
}

TEST(Clusters, HonorificSetsGenderAndSuffixNamesMerge) {
  std::string text = Conllu({{"Mr.", "mr.", "PROPN", 2, "compound", "B-PERSON"},
                             {"Jones", "Jones", "PROPN", 3, "nsubj", "I-PERSON"},
                             {"called", "call", "VERB", 0, "root"},
                             {"Ms.", "ms.", "PROPN", 5, "compound", "B-PERSON"},
                             {"Lopez", "Lopez", "PROPN", 3, "obj", "I-PERSON"}}) +
                     Conllu({{"Jones", "Jones", "PROPN", 2, "nsubj", "B-PERSON"},
                             {"thanked", "thank", "VERB", 0, "root"},
                             {"her", "she", "PRON", 2, "obj"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 1, 1), "Mr. Jones");
  // "her" skips the masculine "Jones" and lands on Ms. Lopez.
  EXPECT_EQ(ClusterAt(e, 1, 3), "Ms. Lopez");
}

TEST(Clusters, NerSpanExtendsOverUntaggedHonorific) {
  std::string text = Conllu({{"Mrs.", "mrs.", "PROPN", 2, "compound"},
                             {"Bennet", "Bennet", "PROPN", 3, "nsubj", "B-PERSON"},
                             {"sighed", "sigh", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  ASSERT_EQ(e.mentions.size(), 1u);
  EXPECT_EQ(e.mentions[0].start, 1);
  EXPECT_EQ(e.mentions[0].surface, "Mrs. Bennet");
}

TEST(Clusters, DiscoursePronounsNeverAttach) {
  std::string text = Conllu({{"Alan", "Alan", "PROPN", 2, "nsubj", "B-PERSON"},
                             {"saw", "see", "VERB", 0, "root"},
                             {"me", "I", "PRON", 2, "obj"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 0, 3), "me");
}

TEST(Clusters, PredicateNominalJoinsSubject) {
  auto docs = LoadConllu(TestData("story_1.conllu"));
  DocumentEntities e = AnalyzeEntities(docs[0], DefaultResources());
  EXPECT_EQ(ClusterAt(e, 0, 5), "Alan");  // "CEO"
  EXPECT_EQ(ClusterAt(e, 1, 1), "Alan");  // "He"
  EXPECT_EQ(ClusterAt(e, 3, 3), "Zara");  // "her" in "called her"
}

TEST(Clusters, AppositiveJoinsGovernor) {
  std::string text = Conllu({{"Jane", "Jane", "PROPN", 5, "nsubj", "B-PERSON"},
                             {",", ",", "PUNCT", 4, "punct"},
                             {"her", "she", "PRON", 4, "nmod:poss"},
                             {"sister", "sister", "NOUN", 1, "appos"},
                             {"smiled", "smile", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_EQ(ClusterAt(e, 0, 4), "Jane");
}

TEST(Mentions, PatternBeatsPronounAndClustersPerPersona) {
  auto docs = LoadConllu(TestData("sherlock.conllu"));
  DocumentEntities e = AnalyzeEntities(docs[0], DefaultResources("she_her.json"));
  for (const Mention &m : e.mentions) {
    if (ClassifyPronoun(ToLower(m.surface)) == PronounClass::kFeminine) {
      EXPECT_EQ(m.kind, MentionKind::kPattern);
      EXPECT_EQ(m.persona, "she_her");
    }
  }
  EXPECT_EQ(ClusterAt(e, 1, 6), "she_her");
  EXPECT_EQ(ClusterAt(e, 1, 9), "she_her");
  EXPECT_EQ(ClusterAt(e, 2, 1), "she_her");
  EXPECT_EQ(ClusterAt(e, 0, 2), "man");
  EXPECT_EQ(ClusterAt(e, 1, 2), "man");
  EXPECT_EQ(ClusterAt(e, 0, 7), "Irene");
}

TEST(Mentions, GazetteerOnlyMatchesNominals) {
  // "man" used as a verb is not a person mention.
  std::string text = Conllu({{"They", "they", "PRON", 2, "nsubj"},
                             {"man", "man", "VERB", 0, "root"},
                             {"the", "the", "DET", 4, "det"},
                             {"doctors", "doctor", "NOUN", 2, "obj"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), DefaultResources());
  EXPECT_FALSE(e.MentionAt(0, 2).has_value());
  EXPECT_TRUE(e.MentionAt(0, 4).has_value());
}

TEST(Clusters, EveryMentionInExactlyOneCluster) {
  for (const char *name : {"story_1.conllu", "story_2.conllu", "story_3.conllu", "pride.conllu"}) {
    for (const ParsedDocument &doc : LoadConllu(TestData(name))) {
      DocumentEntities e = AnalyzeEntities(doc, DefaultResources("pronoun_groups.json"));
      size_t total = 0;
      std::set<std::tuple<int, int, int>> seen;
      for (const EntityCluster &c : e.clusters) {
        EXPECT_FALSE(c.mentions.empty());
        for (const Mention &m : c.mentions) {
          EXPECT_TRUE(seen.insert({m.sentence, m.start, m.end}).second);
          ++total;
        }
      }
      EXPECT_EQ(total, e.mentions.size()) << name;
      EXPECT_EQ(e.mention_cluster.size(), e.mentions.size());
    }
  }
}

TEST(MergeClusters, CombinesDocumentsInCorpusOrder) {
  std::vector<DocumentEntities> docs;
  for (const ParsedDocument &d : LoadConllu(TestData("pride.conllu"))) {
    docs.push_back(AnalyzeEntities(d, DefaultResources("pronoun_groups.json")));
  }
  auto merged = MergeClusters(docs);
  const EntityCluster &she = GetPersonaCluster(merged, "she_her");
  EXPECT_EQ(she.mentions.front().doc_id, "chapter_01");
  EXPECT_EQ(she.mentions.back().doc_id, "chapter_05");
  for (size_t i = 1; i < she.mentions.size(); ++i) {
    const Mention &a = she.mentions[i - 1], &b = she.mentions[i];
    EXPECT_LE(std::tie(a.doc_id, a.sentence, a.start), std::tie(b.doc_id, b.sentence, b.start));
  }
  std::string msg;
  EXPECT_EQ(ThrownCode([&] { GetPersonaCluster(merged, "she_hr"); }, &msg), ErrorCode::kNotFound);
  EXPECT_NE(msg.find("did you mean 'she_her'"), std::string::npos) << msg;
}

TEST(Resources, ParseErrors) {
  EXPECT_EQ(ThrownCode([] { ParsePersonaPatterns(R"({"personas": [{"name": "a", "terms": []}]})"); }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] {
              ParsePersonaPatterns(
                  R"({"personas": [{"name": "a", "terms": ["x"]}, {"name": "a", "terms": ["y"]}]})");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] {
              ParsePersonaPatterns(R"({"personas": [{"name": "a", "terms": ["x"], "mode": "fuzzy"}]})");
            }),
            ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] { ParsePersonaPatterns("{not json"); }), ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] { ParseGazetteer("doctor\tx\tsg\n"); }), ErrorCode::kFormat);
  EXPECT_EQ(ThrownCode([] { ParseGazetteer("doctor\t-\tmany\n"); }), ErrorCode::kFormat);
}

TEST(Resources, LemmaModeMatchesLemmas) {
  auto patterns = ParsePersonaPatterns(
      R"({"personas": [{"name": "medics", "terms": ["doctor"], "mode": "lemma_exact"}]})");
  EntityResources r = DefaultResources();
  r.patterns = patterns;
  std::string text = Conllu({{"Doctors", "doctor", "NOUN", 2, "nsubj"},
                             {"rested", "rest", "VERB", 0, "root"}});
  DocumentEntities e = AnalyzeEntities(ParseOne(text), r);
  EXPECT_EQ(ClusterAt(e, 0, 1), "medics");
}

}  // namespace
}  // namespace connoter
