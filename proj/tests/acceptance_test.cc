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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/extraction.h"
#include "connoter/lexicon.h"
#include "connoter/pipeline.h"
#include "connoter/scoring.h"
#include "connoter/text.h"
#include "extraction_oracle.h"
#include "properties.h"
#include "test_util.h"

namespace connoter::testing {
namespace {

namespace fs = std::filesystem;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string Fmt(double v, int digits = 4) { return FormatFixed(v, digits); }

// 1. Categorical conversion of the 12-verb fixture against the label table.
Verdict LexiconGolden() {
  auto start = std::chrono::steady_clock::now();
  using P = std::optional<ScorePair>;
  const P kAgentHigh = ScorePair{1, -1}, kThemeHigh = ScorePair{-1, 1}, kEqual = ScorePair{0, 0};
  const P kPos = ScorePair{1, 0}, kNeg = ScorePair{-1, 0}, kAbsent;
  // verb -> (power, agency)
  const std::map<std::string, std::pair<P, P>> expected = {
      {"amuse", {kThemeHigh, kPos}}, {"trap", {kAgentHigh, kPos}},  {"obey", {kThemeHigh, kNeg}},
      {"see", {kEqual, kEqual}},     {"beckon", {kAgentHigh, kPos}}, {"slice", {kAbsent, kPos}},
      {"hear", {kThemeHigh, kEqual}}, {"wait", {kAbsent, kNeg}},     {"meet", {kEqual, kAbsent}},
      {"step in", {kAgentHigh, kPos}}, {"thank", {kThemeHigh, kPos}}, {"suffer", {kEqual, kNeg}},
  };
  Lexicon lexicon = LoadCategoricalLexicon(TestData("categorical12.tsv"));
  const Dimension power = Dimension::Parse("power"), agency = Dimension::Parse("agency");
  size_t exact = 0;
  for (const auto &[verb, want] : expected) {
    const VerbEntry *entry = lexicon.Find(verb);
    if (!entry) continue;
    auto get = [&](const Dimension &d) -> P {
      auto it = entry->scores.find(d);
      return it == entry->scores.end() ? kAbsent : P(it->second);
    };
    if (get(power) == want.first && get(agency) == want.second && entry->scores.size() ==
        static_cast<size_t>(want.first.has_value()) + want.second.has_value()) {
      ++exact;
    }
  }
  const double elapsed = Seconds(start);
  return {exact == expected.size() && lexicon.size() == expected.size() && elapsed < 1.0,
          std::to_string(exact) + "/" + std::to_string(expected.size()) + " verbs exact, " +
              Fmt(elapsed * 1000, 1) + " ms"};
}

// 2. ExtractTriples vs the brute-force oracle on the 25-sentence fixture.
Verdict OracleEquivalence() {
  const ParsedDocument doc = LoadConllu(TestData("extraction25.conllu")).at(0);
  const DocumentEntities entities = AnalyzeEntities(doc, DefaultResources());
  const DimensionView view = SelectDimension(
      LoadCategoricalLexicon(TestData("extraction_lexicon.tsv")), Dimension::Parse("power"));
  int agree = 0;
  size_t triples = 0;
  for (bool passive : {false, true}) {
    for (bool particle : {true, false}) {
      ExtractionOptions options{passive, particle};
      std::vector<Triple> got = ExtractTriples(doc, entities, view, options);
      std::vector<Triple> want = OracleTriples(doc, entities, view, options);
      std::sort(got.begin(), got.end(), TripleLess);
      std::sort(want.begin(), want.end(), TripleLess);
      agree += got == want;
      triples += got.size();
    }
  }
  return {doc.sentences.size() == 25 && agree == 4,
          std::to_string(doc.sentences.size()) + " sentences, " + std::to_string(agree) +
              "/4 option settings equal, " + std::to_string(triples) + " triples"};
}

// 3. Sherlock excerpt: man > 0, feminine cluster < 0 via trap/beckon, slice
// agency agent +1.
Verdict SherlockSigns() {
  const std::vector<ParsedDocument> docs = LoadConllu(TestData("sherlock.conllu"));
  const EntityResources resources = DefaultResources();
  CorpusAnalysis power = AnalyzeCorpus(docs, resources, ShippedView("power"));
  std::vector<Triple> triples = power.AllTriples();
  ScoreReport report = GetScoreTotals(triples, Dimension::Parse("power"), power.doc_ids);

  std::string feminine;
  for (const auto &[name, cluster] : power.Clusters()) {
    for (const Mention &m : cluster.mentions) {
      if (ToLower(m.surface) == "she" || ToLower(m.surface) == "her") feminine = name;
    }
  }
  bool trap = false, beckon = false;
  for (const Triple &t : triples) {
    if (t.entity != feminine || t.role != Role::kTheme || t.score >= 0) continue;
    trap |= t.verb_lemma == "trap";
    beckon |= t.verb_lemma == "beckon";
  }
  const double man = report.per_entity.count("man") ? report.per_entity.at("man").score : NAN;
  const double fem =
      report.per_entity.count(feminine) ? report.per_entity.at(feminine).score : NAN;

  CorpusAnalysis agency = AnalyzeCorpus(docs, resources, ShippedView("agency"));
  std::optional<double> slice;
  for (const Triple &t : agency.AllTriples()) {
    if (t.verb_lemma == "slice" && t.role == Role::kAgent) slice = t.score;
  }
  return {man > 0 && fem < 0 && trap && beckon && slice == 1.0,
          "man " + Fmt(man) + ", " + (feminine.empty() ? "<none>" : feminine) + " " + Fmt(fem) +
              " (trap " + (trap ? "yes" : "no") + ", beckon " + (beckon ? "yes" : "no") +
              "), slice agency agent " + (slice ? Fmt(*slice, 0) : "missing")};
}

// 4. Sample stories: diff signs (+, +, -), positive diffs > 0.1.
Verdict StorySigns() {
  auto start = std::chrono::steady_clock::now();
  std::vector<fs::path> files;
  for (int i = 1; i <= 3; ++i) files.push_back(TestData("story_" + std::to_string(i) + ".conllu"));
  const std::vector<ParsedDocument> corpus = LoadCorpus(files);
  CorpusAnalysis analysis = AnalyzeCorpus(corpus, DefaultResources(), ShippedView("power"));
  ScoreReport report =
      GetScoreTotals(analysis.AllTriples(), Dimension::Parse("power"), analysis.doc_ids);
  const std::vector<DyadRole> roles = DyadRolesFromMetadata(corpus);
  std::map<std::string, int> want = {{"story_1", 1}, {"story_2", 1}, {"story_3", -1}};
  std::map<std::string, double> diff;
  for (const DyadRole &role : roles) {
    std::vector<DyadRole> one = {role};
    try {
      diff[role.doc_id] = CompareDyads(report, one).pairs.at(0).diff;
    } catch (const Error &) {
    }
  }
  bool pass = diff.size() == 3;
  std::string detail;
  for (const auto &[doc, sign] : want) {
    const bool have = diff.count(doc);
    const double d = have ? diff.at(doc) : NAN;
    const bool ok = have && (sign > 0 ? d > 0.1 : d < 0);
    pass = pass && ok;
    detail += doc + " " + (have ? Fmt(d) : "unscored") + " (want " + (sign > 0 ? "> +0.1" : "< 0") +
              (ok ? ", ok" : ", wrong") + "); ";
  }
  const double elapsed = Seconds(start);
  pass = pass && elapsed < 5.0;
  return {pass, detail + Fmt(elapsed * 1000, 1) + " ms"};
}

// 5. Synthetic 30-document dyad corpus.
Verdict SyntheticDyads() {
  std::vector<std::string> names;
  {
    std::ifstream in(ShippedData("names.tsv"));
    std::string line;
    while (std::getline(in, line) && names.size() < 60) {
      if (line.empty() || line[0] == '#') continue;
      std::string name = line.substr(0, line.find('\t'));
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      names.push_back(name);
    }
  }
  if (names.size() < 60) return {false, "names table too small"};
  const std::vector<std::string> agent_verbs = {"help", "tell", "reward", "keep"};
  const std::vector<std::string> theme_verbs = {"thank", "obey", "ask"};
  auto clause = [](const std::string &subject, const std::string &verb, const std::string &object) {
    return Conllu({{subject, ToLower(subject), "PROPN", 2, "nsubj", "B-PERSON"},
                   {verb + "ed", verb, "VERB", 0, "root"},
                   {object, ToLower(object), "PROPN", 2, "obj", "B-PERSON"}});
  };
  std::mt19937_64 rng(2026);
  std::string text;
  for (int i = 0; i < 30; ++i) {
    const std::string &high = names[static_cast<size_t>(2 * i)];
    const std::string &low = names[static_cast<size_t>(2 * i + 1)];
    text += "# newdoc id = synthetic_" + std::string(i < 10 ? "0" : "") + std::to_string(i) + "\n";
    text += "# meta::high = " + high + "\n# meta::low = " + low + "\n";
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < n; ++k) {
      text += clause(high, agent_verbs[rng() % agent_verbs.size()], low);
      text += clause(low, theme_verbs[rng() % theme_verbs.size()], high);
    }
    // Neutral contact varies the per-entity means.
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) text += clause(high, "see", low);
    for (int k = static_cast<int>(rng() % 3); k > 0; --k) text += clause(low, "see", high);
  }
  const std::vector<ParsedDocument> corpus = ParseConllu(text, "synthetic");
  CorpusAnalysis analysis = AnalyzeCorpus(corpus, DefaultResources(), ShippedView("power"));
  ScoreReport report =
      GetScoreTotals(analysis.AllTriples(), Dimension::Parse("power"), analysis.doc_ids);
  DyadComparison c = CompareDyads(report, DyadRolesFromMetadata(corpus));
  return {corpus.size() == 30 && c.pairs.size() == 30 && c.mean_diff > 0 && c.test.p < 0.05,
          std::to_string(c.pairs.size()) + " pairs, high mean " + Fmt(c.high_mean) +
              ", low mean " + Fmt(c.low_mean) + ", mean diff " + Fmt(c.mean_diff) +
              ", Welch t " + Fmt(c.test.t, 2) + ", p " + FormatFixed(c.test.p, 6)};
}

Triple Scored(const std::string &entity, double score, const std::string &doc) {
  Triple t;
  t.entity = entity;
  t.verb_lemma = score > 0 ? "help" : "thank";
  t.score = score;
  t.doc_id = doc;
  return t;
}

// 6. Bootstrap: zero spread on one document, +-1 construction centered on 0,
// seed reproducibility.
Verdict BootstrapChecks() {
  std::map<std::string, std::vector<Triple>> single = {
      {"a", {Scored("x", 1.0, "a"), Scored("x", -1.0, "a"), Scored("y", 0.5, "a")}}};
  BootstrapReport one = BootstrapScores(single, 200, 1);
  bool zero = !one.per_entity.empty();
  for (const auto &[name, e] : one.per_entity) zero = zero && e.std == 0.0;

  std::map<std::string, std::vector<Triple>> plus_minus = {{"a", {Scored("x", 1.0, "a")}},
                                                           {"b", {Scored("x", -1.0, "b")}}};
  BootstrapReport big = BootstrapScores(plus_minus, 10000, 12345);
  const double mean = big.per_entity.at("x").mean;
  const bool same = big == BootstrapScores(plus_minus, 10000, 12345, 4);
  return {zero && std::fabs(mean) <= 0.05 && same,
          std::string("single-doc stds ") + (zero ? "all 0" : "nonzero") + ", B=10000 mean " +
              Fmt(mean) + " (|mean| <= 0.05), same seed " + (same ? "identical" : "differs")};
}

// 7. Property suite.
Verdict Invariants() {
  const std::vector<PropertyOutcome> outcomes = {
      CheckScoreBounds(3, 200), CheckClusterPartition(2, 300), CheckPermutationInvariance(4, 150),
      CheckWeightedMeanAdditivity(5, 300), CheckOracleEquivalence(1, 500)};
  int cases = 0, failures = 0;
  std::string first;
  for (const PropertyOutcome &o : outcomes) {
    cases += o.cases;
    failures += o.failures;
    if (first.empty() && o.failures) first = "; first failure in '" + o.name + "'";
  }
  return {cases >= 1000 && failures == 0,
          std::to_string(cases) + " cases, " + std::to_string(failures) + " failures" + first};
}

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 8. Two CLI score runs with bootstrap produce identical bytes.
Verdict CliDeterminism() {
  const fs::path root = fs::temp_directory_path() / ("connoter_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<fs::path> outs = {root / "run1", root / "run2"};
  for (const fs::path &out : outs) {
    fs::create_directories(out);
    const std::string command = std::string("'") + CONNOTER_CLI_PATH + "' score '" +
                                TestData("pride.conllu").string() + "' --personas '" +
                                TestData("pronoun_groups.json").string() +
                                "' --bootstrap 20 --seed 7 --out '" + out.string() +
                                "' >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      fs::remove_all(root);
      return {false, "cli exited with status " + std::to_string(status)};
    }
  }
  bool same = true;
  std::string detail;
  for (const char *name : {"report.json", "scores.svg"}) {
    const std::string a = ReadFile(outs[0] / name), b = ReadFile(outs[1] / name);
    same = same && !a.empty() && a == b;
    detail += std::string(name) + " " + std::to_string(a.size()) + " bytes " +
              (a == b ? "identical" : "differ") + "; ";
  }
  fs::remove_all(root);
  return {same, detail.substr(0, detail.size() - 2)};
}

}  // namespace
}  // namespace connoter::testing

int main() {
  using namespace connoter::testing;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"lexicon conversion golden", LexiconGolden},
      {"extraction oracle equivalence", OracleEquivalence},
      {"sherlock fixture signs", SherlockSigns},
      {"sample story signs", StorySigns},
      {"synthetic dyad corpus", SyntheticDyads},
      {"bootstrap correctness", BootstrapChecks},
      {"invariant suite", Invariants},
      {"end-to-end determinism", CliDeterminism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s  %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
