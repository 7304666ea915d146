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

#include "transdir/corpus.h"

#include <unordered_map>
#include <unordered_set>

#include "transdir/error.h"

namespace transdir {

std::size_t Corpus::pair_count() const {
  std::size_t n = 0;
  for (const Document& d : documents) n += d.size();
  return n;
}

std::vector<SegmentPair> Corpus::all_pairs() const {
  std::vector<SegmentPair> out;
  out.reserve(pair_count());
  for (const Document& d : documents) {
    out.insert(out.end(), d.pairs.begin(), d.pairs.end());
  }
  return out;
}

Corpus assemble_corpus(std::vector<SegmentPair> pairs,
                       std::map<std::string, std::string> provenance) {
  Corpus corpus;
  corpus.provenance = std::move(provenance);
  std::unordered_map<std::string, std::size_t> doc_index;
  std::unordered_set<std::string> pair_ids;
  for (SegmentPair& p : pairs) {
    validate(p);
    if (!pair_ids.insert(p.pair_id).second) {
      throw DuplicateSegmentId("duplicate pair_id '" + p.pair_id + "'");
    }
    auto [it, inserted] = doc_index.try_emplace(p.doc_id,
                                                corpus.documents.size());
    if (inserted) corpus.documents.push_back(Document{p.doc_id, {}});
    corpus.documents[it->second].pairs.push_back(std::move(p));
  }
  for (const Document& d : corpus.documents) validate(d);
  return corpus;
}

}  // namespace transdir
