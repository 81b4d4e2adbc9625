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


// Command-line front end: score a parsed corpus against a connotation lexicon,
// inspect the results and render charts.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/error.h"
#include "connoter/extraction.h"
#include "connoter/lexicon.h"
#include "connoter/pipeline.h"
#include "connoter/report.h"
#include "connoter/scoring.h"
#include "connoter/svg.h"
#include "connoter/text.h"

namespace fs = std::filesystem;
using namespace connoter;

namespace {

struct RunConfig {
  std::vector<std::string> corpus;
  std::string lexicon = "power_agency";
  std::string lexicon_format;  // empty: infer
  std::string dimension = "power";
  std::string personas;
  std::string gazetteer;
  std::string names;
  size_t bootstrap = 0;
  uint64_t seed = 0;
  size_t top_k = 10;
  size_t bottom_k = 10;
  bool passive_as_theme = false;
  bool no_particle_check = false;
  std::string out = ".";
  bool json = false;
  int jobs = 1;
  std::string roles;
  int bins = 20;
  bool pooled = false;
  size_t max_rows = 20;

  // inspect / plot-verbs
  std::string inspect_kind;
  std::string key;
};

fs::path DataDir() {
  if (const char *env = std::getenv("CONNOTER_DATA_DIR"); env && *env) return env;
  return CONNOTER_DEFAULT_DATA_DIR;
}

fs::path ResolveLexiconPath(const std::string &lexicon) {
  if (fs::exists(lexicon)) return lexicon;
  fs::path builtin = DataDir() / "lexicons" / (lexicon + ".tsv");
  if (lexicon.find('/') == std::string::npos && fs::exists(builtin)) return builtin;
  throw Error(ErrorCode::kIo, "lexicon not found: " + lexicon + " (looked in " +
                                  (DataDir() / "lexicons").string() + ")");
}

// A header made only of verb/power/agency columns is categorical.
bool LooksCategorical(const std::string &text) {
  for (std::string_view line : Split(text, '\n')) {
    std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    char delim = trimmed.find('\t') != std::string_view::npos ? '\t' : ',';
    for (std::string_view col : Split(trimmed, delim)) {
      std::string c = ToLower(Trim(col));
      if (c != "verb" && c != "power" && c != "agency") return false;
    }
    return true;
  }
  return false;
}

struct Loaded {
  std::vector<ParsedDocument> corpus;
  Lexicon lexicon;
  DimensionView view;
  EntityResources resources;
  ExtractionOptions options;
};

Loaded Load(const RunConfig &cfg) {
  std::vector<fs::path> paths(cfg.corpus.begin(), cfg.corpus.end());
  std::vector<ParsedDocument> corpus = LoadCorpus(paths);
  if (corpus.empty()) throw Error(ErrorCode::kNoDocuments, "no documents");

  const fs::path lexicon_path = ResolveLexiconPath(cfg.lexicon);
  const Dimension dimension = Dimension::Parse(cfg.dimension);
  const std::string text = ReadTextFile(lexicon_path);
  std::string format = cfg.lexicon_format;
  if (format.empty()) format = LooksCategorical(text) ? "categorical" : "numeric";
  Lexicon lexicon =
      format == "categorical"
          ? ParseCategoricalLexicon(text, lexicon_path.filename().string())
          : ParseNumericLexicon(text, lexicon_path.filename().string(), {}, dimension);
  DimensionView view = SelectDimension(lexicon, dimension);

  EntityResources resources;
  if (!cfg.personas.empty()) resources.patterns = LoadPersonaPatterns(cfg.personas);
  resources.gazetteer =
      LoadGazetteer(cfg.gazetteer.empty() ? DataDir() / "gazetteer.tsv" : fs::path(cfg.gazetteer));
  resources.names =
      LoadNameGenderTable(cfg.names.empty() ? DataDir() / "names.tsv" : fs::path(cfg.names));

  ExtractionOptions options;
  options.passive_as_theme = cfg.passive_as_theme;
  options.particle_check = !cfg.no_particle_check;
  return {std::move(corpus), std::move(lexicon), std::move(view), std::move(resources), options};
}

// Settings that determine the report contents; paths as given.
Json EffectiveConfig(const RunConfig &cfg) {
  Json config;
  config["corpus"] = cfg.corpus;
  config["lexicon"] = cfg.lexicon;
  config["lexicon_format"] = cfg.lexicon_format.empty() ? "auto" : cfg.lexicon_format;
  config["dimension"] = cfg.dimension;
  config["personas"] = cfg.personas;
  config["gazetteer"] = cfg.gazetteer.empty() ? "default" : cfg.gazetteer;
  config["names"] = cfg.names.empty() ? "default" : cfg.names;
  config["passive_as_theme"] = cfg.passive_as_theme;
  config["particle_check"] = !cfg.no_particle_check;
  config["bootstrap"] = cfg.bootstrap;
  config["seed"] = cfg.seed;
  config["top_k"] = cfg.top_k;
  config["bottom_k"] = cfg.bottom_k;
  return config;
}

// Writes every file to a temporary name first, then renames them all, so a
// failure leaves no partial output behind.
void WriteOutputs(const fs::path &dir, const std::map<std::string, std::string> &files) {
  fs::create_directories(dir);
  std::vector<fs::path> staged;
  try {
    for (const auto &[name, contents] : files) {
      fs::path tmp = dir / (name + ".partial");
      WriteFileAtomic(tmp, contents);
      staged.push_back(tmp);
    }
  } catch (...) {
    for (const fs::path &p : staged) fs::remove(p);
    throw;
  }
  for (const auto &[name, contents] : files) {
    fs::rename(dir / (name + ".partial"), dir / name);
  }
}

std::string ScoresSvg(const ScoreReport &report, const BootstrapReport *bootstrap,
                      const RunConfig &cfg) {
  bool clamped = false;
  RankedScores chosen = SelectTopBottom(Rank(report.per_entity), cfg.top_k, cfg.bottom_k, &clamped);
  if (clamped) {
    std::cerr << "warning: top/bottom k exceeds the " << report.per_entity.size()
              << " scored entities; showing all\n";
  }
  std::vector<Bar> bars;
  for (const auto &[name, s] : chosen) {
    Bar bar{name, s.score, std::nullopt};
    if (bootstrap) {
      if (auto it = bootstrap->per_entity.find(name); it != bootstrap->per_entity.end()) {
        bar.value = it->second.mean;
        bar.error = it->second.std;
      }
    }
    bars.push_back(std::move(bar));
  }
  return RenderBarChart(bars, report.dimension.ToString() + " scores");
}

void PrintRanked(const RankedScores &ranked) {
  std::cout << "entity\tscore\tn_matches\n";
  for (const auto &[name, s] : ranked) {
    std::cout << name << '\t' << FormatFixed(s.score, 4) << '\t' << s.n_matches << '\n';
  }
}

struct Scored {
  Loaded loaded;
  CorpusAnalysis analysis;
  ScoreReport report;
};

Scored ScoreCorpus(const RunConfig &cfg) {
  Loaded loaded = Load(cfg);
  CorpusAnalysis analysis =
      AnalyzeCorpus(loaded.corpus, loaded.resources, loaded.view, loaded.options, cfg.jobs);
  std::vector<Triple> triples = analysis.AllTriples();
  ScoreReport report = GetScoreTotals(triples, loaded.view.dimension(), analysis.doc_ids);
  return {std::move(loaded), std::move(analysis), std::move(report)};
}

int CmdScore(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  std::optional<BootstrapReport> bootstrap;
  if (cfg.bootstrap > 0) {
    bootstrap = BootstrapScores(s.analysis.TriplesByDoc(), cfg.bootstrap, cfg.seed, cfg.jobs);
  }
  const BootstrapReport *boot = bootstrap ? &*bootstrap : nullptr;
  Json report = ScoreReportJson(s.report, boot, EffectiveConfig(cfg));
  std::map<std::string, std::string> files = {
      {"report.json", DumpJson(report)},
      {"report.csv", ScoreReportCsv(s.report)},
      {"scores.svg", ScoresSvg(s.report, boot, cfg)},
  };
  WriteOutputs(cfg.out, files);
  if (cfg.json) {
    std::cout << files["report.json"];
  } else {
    PrintRanked(Rank(s.report.per_entity));
  }
  return 0;
}

int CmdPlotScores(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  std::optional<BootstrapReport> bootstrap;
  if (cfg.bootstrap > 0) {
    bootstrap = BootstrapScores(s.analysis.TriplesByDoc(), cfg.bootstrap, cfg.seed, cfg.jobs);
  }
  WriteOutputs(cfg.out, {{"scores.svg", ScoresSvg(s.report, bootstrap ? &*bootstrap : nullptr, cfg)}});
  return 0;
}

std::string SafeFileStem(const std::string &name) {
  std::string out;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

std::vector<VerbMatrixRow> PersonaRows(const std::vector<Triple> &triples,
                                       const ScoreReport &report, const std::string &persona) {
  if (!report.per_entity.count(persona)) {
    std::vector<std::string> known;
    for (const auto &[name, score] : report.per_entity) known.push_back(name);
    std::string message = "unknown persona '" + persona + "'";
    if (auto near = NearestMatch(persona, known)) message += " (did you mean '" + *near + "'?)";
    throw Error(ErrorCode::kNotFound, message + "; scored entities: " + JoinNames(known));
  }
  return VerbMatrixForPersona(triples, persona);
}

int CmdPlotVerbs(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  std::vector<VerbMatrixRow> rows = PersonaRows(s.analysis.AllTriples(), s.report, cfg.key);
  if (rows.size() > cfg.max_rows) rows.resize(cfg.max_rows);
  std::vector<HeatCell> cells;
  for (const VerbMatrixRow &row : rows) {
    const char *color = row.sign == VerbSign::kHasPower    ? kHasPowerColor
                        : row.sign == VerbSign::kLacksPower ? kLacksPowerColor
                                                             : kNeutralColor;
    cells.push_back({row.Label(), row.count, color});
  }
  WriteOutputs(cfg.out, {{"verbs_" + SafeFileStem(cfg.key) + ".svg",
                          RenderHeatmap(cells, cfg.key + " verbs")}});
  return 0;
}

int CmdInspect(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  if (cfg.inspect_kind == "persona") {
    const std::map<std::string, EntityCluster> clusters = s.analysis.Clusters();
    const EntityCluster &cluster = GetPersonaCluster(clusters, cfg.key);
    if (cfg.json) {
      std::cout << DumpJson(ClusterJson(cluster));
      return 0;
    }
    std::cout << "doc_id\tsentence\tstart\tend\tsurface\n";
    for (const Mention &m : cluster.mentions) {
      std::cout << m.doc_id << '\t' << m.sentence << '\t' << m.start << '\t' << m.end << '\t'
                << m.surface << '\n';
    }
  } else if (cfg.inspect_kind == "verb") {
    std::vector<Triple> triples = s.analysis.AllTriples();
    std::vector<VerbMatch> matches = GetDocumentsForVerb(triples, cfg.key);
    if (cfg.json) {
      std::cout << DumpJson(VerbMatchesJson(matches));
      return 0;
    }
    std::cout << "doc_id\tsentence\tentity\trole\tscore\n";
    for (const VerbMatch &m : matches) {
      std::cout << m.doc_id << '\t' << m.sentence << '\t' << m.entity << '\t' << RoleName(m.role)
                << '\t' << FormatFixed(m.score, 2) << '\n';
    }
  } else {
    const EntityScores &scores = GetScoresForDoc(s.report, cfg.key);
    if (cfg.json) {
      std::cout << DumpJson(EntityScoresJson(scores));
      return 0;
    }
    PrintRanked(Rank(scores));
  }
  return 0;
}

int CmdDyads(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  std::vector<DyadRole> roles = cfg.roles.empty() ? DyadRolesFromMetadata(s.loaded.corpus)
                                                  : ParseDyadRoles(ReadTextFile(cfg.roles));
  if (roles.empty()) {
    throw Error(ErrorCode::kNotFound, "no dyad roles: pass --roles or add meta::high/low");
  }
  DyadComparison cmp = CompareDyads(s.report, roles, cfg.pooled);

  std::vector<double> diffs;
  for (const DyadPair &p : cmp.pairs) diffs.push_back(p.diff);
  std::vector<HistogramSeries> by_role = {{"high", kHasPowerColor, cmp.high_scores},
                                          {"low", kLacksPowerColor, cmp.low_scores}};
  std::vector<HistogramSeries> by_diff = {{"high - low", kNeutralColor, diffs}};
  WriteOutputs(cfg.out,
               {{"dyads.json", DumpJson(DyadComparisonJson(cmp))},
                {"roles_hist.svg", RenderHistogram(by_role, cfg.bins, "Scores by role",
                                                   s.report.dimension.ToString() + " score")},
                {"diff_hist.svg", RenderHistogram(by_diff, cfg.bins, "Score differences",
                                                  "high - low")}});
  if (cfg.json) {
    std::cout << DumpJson(DyadComparisonJson(cmp));
    return 0;
  }
  std::cout << "doc_id\thigh\tlow\thigh_score\tlow_score\tdiff\n";
  for (const DyadPair &p : cmp.pairs) {
    std::cout << p.doc_id << '\t' << p.high << '\t' << p.low << '\t' << FormatFixed(p.high_score, 4)
              << '\t' << FormatFixed(p.low_score, 4) << '\t' << FormatFixed(p.diff, 4) << '\n';
  }
  std::cout << "high mean " << FormatFixed(cmp.high_mean, 4) << ", low mean "
            << FormatFixed(cmp.low_mean, 4) << '\n'
            << "mean diff " << FormatFixed(cmp.mean_diff, 4) << ", median diff "
            << FormatFixed(cmp.median_diff, 4) << '\n'
            << (cmp.pooled ? "pooled" : "welch") << " t " << FormatFixed(cmp.test.t, 4) << ", df "
            << FormatFixed(cmp.test.df, 2) << ", p " << FormatFixed(cmp.test.p, 4) << '\n';
  return 0;
}

int CmdStats(const RunConfig &cfg) {
  Scored s = ScoreCorpus(cfg);
  CorpusStats stats = ComputeCorpusStats(s.loaded.corpus);
  std::vector<Triple> triples = s.analysis.AllTriples();
  std::vector<EntityVerbPair> pairs = EntityVerbPairs(triples);
  if (cfg.json) {
    Json out = CorpusStatsJson(stats);
    out["lexicon_entries"] = s.loaded.view.size();
    out["triples"] = triples.size();
    out["entity_verb_pairs"] = EntityVerbPairsJson(pairs);
    std::cout << DumpJson(out);
    return 0;
  }
  std::cout << "documents\t" << stats.documents << '\n'
            << "sentences\t" << stats.sentences << '\n'
            << "tokens\t" << stats.tokens << '\n'
            << "verb_tokens\t" << stats.verb_tokens << '\n'
            << "lexicon_entries\t" << s.loaded.view.size() << '\n'
            << "triples\t" << triples.size() << '\n'
            << "\nentity\tverb\trole\tcount\n";
  for (const EntityVerbPair &p : pairs) {
    std::cout << p.entity << '\t' << p.verb_lemma << '\t' << RoleName(p.role) << '\t' << p.count
              << '\n';
  }
  return 0;
}

void AddCorpus(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("corpus", cfg.corpus, "CoNLL-U files or directories")->required();
  cmd->fallthrough();
}

}  // namespace

int main(int argc, char **argv) {
  RunConfig cfg;
  CLI::App app{"Entity-centric connotation-frame scoring over parsed text"};
  app.set_config("--config", "", "TOML file with option defaults");
  app.require_subcommand(1);

  app.add_option("--lexicon", cfg.lexicon, "Lexicon file or built-in name")
      ->capture_default_str();
  app.add_option("--lexicon-format", cfg.lexicon_format, "Lexicon format (default: inferred)")
      ->check(CLI::IsMember({"numeric", "categorical"}));
  app.add_option("--dimension", cfg.dimension, "Scored dimension, e.g. power or perspective:writer")
      ->capture_default_str();
  app.add_option("--personas", cfg.personas, "Persona pattern JSON");
  app.add_option("--gazetteer", cfg.gazetteer, "Person-term gazetteer (default: shipped)");
  app.add_option("--names", cfg.names, "First-name gender table (default: shipped)");
  app.add_option("--bootstrap", cfg.bootstrap, "Bootstrap samples (0 disables)");
  app.add_option("--seed", cfg.seed, "Bootstrap seed")->capture_default_str();
  app.add_option("--top-k", cfg.top_k, "Highest-scoring entities to chart")->capture_default_str();
  app.add_option("--bottom-k", cfg.bottom_k, "Lowest-scoring entities to chart")
      ->capture_default_str();
  app.add_flag("--passive-as-theme", cfg.passive_as_theme, "Treat passive subjects as themes");
  app.add_flag("--no-particle-check", cfg.no_particle_check,
               "Match particle entries without checking the particle");
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_flag("--json", cfg.json, "Print JSON instead of tables");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--roles", cfg.roles, "Dyad roles file (doc_id, high, low)");
  app.add_option("--bins", cfg.bins, "Histogram bins")->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--pooled", cfg.pooled, "Pooled-variance t-test instead of Welch");
  app.add_option("--max-rows", cfg.max_rows, "Heatmap rows")->capture_default_str();

  CLI::App *score = app.add_subcommand("score", "Write report.json, report.csv and scores.svg");
  AddCorpus(score, cfg);
  CLI::App *plot_scores = app.add_subcommand("plot-scores", "Write scores.svg");
  AddCorpus(plot_scores, cfg);
  CLI::App *plot_verbs = app.add_subcommand("plot-verbs", "Write verbs_<persona>.svg");
  plot_verbs->add_option("persona", cfg.key, "Entity or persona name")->required();
  AddCorpus(plot_verbs, cfg);
  CLI::App *inspect = app.add_subcommand("inspect", "Print a persona, verb or document table");
  inspect->add_option("kind", cfg.inspect_kind, "persona | verb | doc")
      ->required()
      ->check(CLI::IsMember({"persona", "verb", "doc"}));
  inspect->add_option("key", cfg.key, "Persona, verb lemma or doc id")->required();
  AddCorpus(inspect, cfg);
  CLI::App *dyads = app.add_subcommand("dyads", "Compare high- and low-role entities");
  AddCorpus(dyads, cfg);
  CLI::App *stats = app.add_subcommand("stats", "Corpus and match counts");
  AddCorpus(stats, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) return CmdScore(cfg);
    if (plot_scores->parsed()) return CmdPlotScores(cfg);
    if (plot_verbs->parsed()) return CmdPlotVerbs(cfg);
    if (inspect->parsed()) return CmdInspect(cfg);
    if (dyads->parsed()) return CmdDyads(cfg);
    if (stats->parsed()) return CmdStats(cfg);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kNoDocuments ? 2 : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
