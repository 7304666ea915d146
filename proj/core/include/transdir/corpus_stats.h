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

#ifndef TRANSDIR_CORPUS_STATS_H_
#define TRANSDIR_CORPUS_STATS_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "transdir/corpus.h"
#include "transdir/types.h"

namespace transdir {

inline constexpr std::size_t kDefaultDocThreshold = 10;

struct CorpusStatsRow {
  // "de->en" (original -> translation); "x<>y none" for indirect pairs and
  // "x<>y unknown" for unlabeled ones.
  std::string direction;
  std::size_t source_sentences = 0;  // distinct (doc, source text)
  std::size_t documents = 0;
  std::size_t documents_at_threshold = 0;  // >= threshold source sentences
  std::size_t segment_pairs = 0;
  std::map<TranslationType, std::size_t> target_sentences;

  friend bool operator==(const CorpusStatsRow&,
                         const CorpusStatsRow&) = default;
};

// Rows sorted by direction label; `total` is their column-wise sum.
struct CorpusStats {
  std::size_t doc_threshold = kDefaultDocThreshold;
  std::vector<CorpusStatsRow> rows;
  CorpusStatsRow total;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Several references for one source (one pair per reference) count as one
// source sentence and several target sentences.
CorpusStats corpus_stats(const Corpus& corpus,
                         std::size_t doc_threshold = kDefaultDocThreshold);

}  // namespace transdir

#endif  // TRANSDIR_CORPUS_STATS_H_
