// Copyright 2026 The transdir Authors.
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

#include "transdir/corpus_stats.h"

#include <set>

namespace transdir {

namespace {

std::string direction_label(const Document& doc) {
  switch (doc.gold_direction()) {
    case Direction::kX2Y: return doc.lang_x() + "->" + doc.lang_y();
    case Direction::kY2X: return doc.lang_y() + "->" + doc.lang_x();
    case Direction::kNone: return doc.lang_x() + "<>" + doc.lang_y() + " none";
    case Direction::kUnknown: break;
  }
  return doc.lang_x() + "<>" + doc.lang_y() + " unknown";
}

}  // namespace

CorpusStats corpus_stats(const Corpus& corpus, std::size_t doc_threshold) {
  CorpusStats stats;
  stats.doc_threshold = doc_threshold;
  std::map<std::string, CorpusStatsRow> rows;
  for (const Document& doc : corpus.documents) {
    const std::string label = direction_label(doc);
    CorpusStatsRow& row = rows[label];
    row.direction = label;
    std::set<std::string> sources;
    for (const SegmentPair& p : doc.pairs) {
      sources.insert(p.gold_direction == Direction::kY2X ? p.text_y
                                                         : p.text_x);
      ++row.target_sentences[p.translation_type];
    }
    row.source_sentences += sources.size();
    row.segment_pairs += doc.size();
    ++row.documents;
    if (sources.size() >= doc_threshold) ++row.documents_at_threshold;
  }
  stats.total.direction = "total";
  for (auto& [label, row] : rows) {
    stats.total.source_sentences += row.source_sentences;
    stats.total.documents += row.documents;
    stats.total.documents_at_threshold += row.documents_at_threshold;
    stats.total.segment_pairs += row.segment_pairs;
    for (const auto& [type, n] : row.target_sentences) {
      stats.total.target_sentences[type] += n;
    }
    stats.rows.push_back(std::move(row));
  }
  return stats;
}

}  // namespace transdir
