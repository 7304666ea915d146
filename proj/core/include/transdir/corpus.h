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

#ifndef TRANSDIR_CORPUS_H_
#define TRANSDIR_CORPUS_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "transdir/segment.h"

namespace transdir {

// A parallel corpus: documents in first-appearance order, each holding its
// pairs in input order. Immutable once built.
struct Corpus {
  std::vector<Document> documents;
  std::map<std::string, std::string> provenance;  // free-form, not serialized

  std::size_t pair_count() const;
  std::vector<SegmentPair> all_pairs() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Groups pairs into documents by doc_id (first-appearance order) and checks
// every invariant: valid pairs, unique pair ids (DuplicateSegmentId),
// homogeneous documents (HeterogeneousDocument).
Corpus assemble_corpus(std::vector<SegmentPair> pairs,
                       std::map<std::string, std::string> provenance = {});

}  // namespace transdir

#endif  // TRANSDIR_CORPUS_H_
