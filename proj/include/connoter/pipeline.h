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

#ifndef CONNOTER_PIPELINE_H_
#define CONNOTER_PIPELINE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "connoter/corpus.h"
#include "connoter/entities.h"
#include "connoter/extraction.h"
#include "connoter/lexicon.h"

namespace connoter {

struct DocumentAnalysis {
  DocumentEntities entities;
  std::vector<Triple> triples;
};

// Entities and triples for every document, in doc_id order.
struct CorpusAnalysis {
  std::vector<std::string> doc_ids;
  std::vector<DocumentAnalysis> documents;

  std::vector<Triple> AllTriples() const;
  std::map<std::string, std::vector<Triple>> TriplesByDoc() const;
  std::map<std::string, EntityCluster> Clusters() const;
};

// Per-document entity analysis and triple extraction, spread over |jobs|
// threads. The result does not depend on |jobs| or on the input order.
CorpusAnalysis AnalyzeCorpus(std::span<const ParsedDocument> corpus,
                             const EntityResources &resources, const DimensionView &view,
                             const ExtractionOptions &options = {}, int jobs = 1);

}  // namespace connoter

#endif  // CONNOTER_PIPELINE_H_
