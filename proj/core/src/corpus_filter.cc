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

#include "transdir/corpus_filter.h"

#include <map>
#include <utility>

namespace transdir {

namespace {

std::pair<std::string, std::string> unordered_pair(const std::string& a,
                                                   const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool pair_matches(const SegmentPair& p, const CorpusFilter& f) {
  if (f.gold_directions && !f.gold_directions->count(p.gold_direction)) {
    return false;
  }
  if (f.language_directions &&
      !f.language_directions->count(language_direction(p))) {
    return false;
  }
  if (f.language_pairs && !f.language_pairs->count(p.lang_x + "-" + p.lang_y) &&
      !f.language_pairs->count(p.lang_y + "-" + p.lang_x)) {
    return false;
  }
  if (f.translation_types && !f.translation_types->count(p.translation_type)) {
    return false;
  }
  if (f.dataset_tags && !f.dataset_tags->count(p.dataset_tag.value_or(""))) {
    return false;
  }
  return true;
}

}  // namespace

std::string language_direction(const SegmentPair& p) {
  switch (p.gold_direction) {
    case Direction::kX2Y: return p.lang_x + "-" + p.lang_y;
    case Direction::kY2X: return p.lang_y + "-" + p.lang_x;
    default: return {};
  }
}

Corpus filter_corpus(const Corpus& corpus, const CorpusFilter& filter) {
  Corpus out;
  out.provenance = corpus.provenance;
  for (const Document& doc : corpus.documents) {
    Document kept{doc.doc_id, {}};
    for (const SegmentPair& p : doc.pairs) {
      if (pair_matches(p, filter)) kept.pairs.push_back(p);
    }
    if (kept.pairs.empty()) continue;
    if (filter.min_doc_sentences && kept.size() < *filter.min_doc_sentences) {
      continue;
    }
    out.documents.push_back(std::move(kept));
  }

  if (filter.min_docs_per_direction) {
    // Per unordered language pair: surviving documents per original language.
    std::map<std::pair<std::string, std::string>,
             std::map<std::string, std::size_t>>
        counts;
    for (const Document& doc : out.documents) {
      const SegmentPair& first = doc.pairs.front();
      auto& per_origin = counts[unordered_pair(first.lang_x, first.lang_y)];
      if (first.gold_direction == Direction::kX2Y) ++per_origin[first.lang_x];
      if (first.gold_direction == Direction::kY2X) ++per_origin[first.lang_y];
    }
    const std::size_t need = *filter.min_docs_per_direction;
    std::vector<Document> kept;
    for (Document& doc : out.documents) {
      const auto key = unordered_pair(doc.lang_x(), doc.lang_y());
      const auto& per_origin = counts[key];
      auto count_of = [&](const std::string& lang) {
        auto it = per_origin.find(lang);
        return it == per_origin.end() ? std::size_t{0} : it->second;
      };
      if (count_of(key.first) >= need && count_of(key.second) >= need) {
        kept.push_back(std::move(doc));
      }
    }
    out.documents = std::move(kept);
  }
  return out;
}

}  // namespace transdir
