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

#ifndef TRANSDIR_CORPUS_FILTER_H_
#define TRANSDIR_CORPUS_FILTER_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "transdir/corpus.h"
#include "transdir/types.h"

namespace transdir {

// Every supplied criterion must hold. Pair-level criteria are applied first
// (documents left empty disappear), then min_doc_sentences, then
// min_docs_per_direction, which drops a whole language pair unless both of
// its original languages have at least that many surviving documents.
struct CorpusFilter {
  std::optional<std::set<Direction>> gold_directions;
  // "src-tgt" with src the original language, e.g. "de-en". Indirect and
  // unlabeled pairs never match.
  std::optional<std::set<std::string>> language_directions;
  // Unordered language pairs, written "a-b" in either order.
  std::optional<std::set<std::string>> language_pairs;
  std::optional<std::set<TranslationType>> translation_types;
  // Pairs without a tag match the empty string.
  std::optional<std::set<std::string>> dataset_tags;
  std::optional<std::size_t> min_doc_sentences;
  std::optional<std::size_t> min_docs_per_direction;
};

// Never throws on valid input; may return an empty corpus.
Corpus filter_corpus(const Corpus& corpus, const CorpusFilter& filter);

// "de-en" for a pair whose original side is German; empty for NONE/UNKNOWN.
std::string language_direction(const SegmentPair& pair);

}  // namespace transdir

#endif  // TRANSDIR_CORPUS_FILTER_H_
