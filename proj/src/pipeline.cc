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

#include "connoter/pipeline.h"

#include <algorithm>
#include <numeric>

#include "connoter/parallel.h"

namespace connoter {

std::vector<Triple> CorpusAnalysis::AllTriples() const {
  std::vector<Triple> all;
  for (const DocumentAnalysis &doc : documents) {
    all.insert(all.end(), doc.triples.begin(), doc.triples.end());
  }
  return all;
}

std::map<std::string, std::vector<Triple>> CorpusAnalysis::TriplesByDoc() const {
  std::map<std::string, std::vector<Triple>> by_doc;
  for (size_t i = 0; i < documents.size(); ++i) by_doc[doc_ids[i]] = documents[i].triples;
  return by_doc;
}

std::map<std::string, EntityCluster> CorpusAnalysis::Clusters() const {
  std::vector<DocumentEntities> entities;
  entities.reserve(documents.size());
  for (const DocumentAnalysis &doc : documents) entities.push_back(doc.entities);
  return MergeClusters(entities);
}

CorpusAnalysis AnalyzeCorpus(std::span<const ParsedDocument> corpus,
                             const EntityResources &resources, const DimensionView &view,
                             const ExtractionOptions &options, int jobs) {
  std::vector<size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return corpus[a].doc_id < corpus[b].doc_id; });

  CorpusAnalysis analysis;
  analysis.documents.resize(corpus.size());
  for (size_t i : order) analysis.doc_ids.push_back(corpus[i].doc_id);
  ParallelFor(order.size(), jobs, [&](size_t k) {
    const ParsedDocument &doc = corpus[order[k]];
    DocumentAnalysis &out = analysis.documents[k];
    out.entities = AnalyzeEntities(doc, resources);
    out.triples = ExtractTriples(doc, out.entities, view, options);
  });
  return analysis;
}

}  // namespace connoter
