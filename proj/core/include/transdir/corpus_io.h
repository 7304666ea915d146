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

#ifndef TRANSDIR_CORPUS_IO_H_
#define TRANSDIR_CORPUS_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "transdir/corpus.h"
#include "transdir/segment.h"

namespace transdir {

// Normalized corpus format: newline-delimited JSON, one pair per line,
//   {"pair_id","doc_id","lang_x","lang_y","text_x","text_y",
//    "gold_direction":"x2y|y2x|none|unknown",
//    "translation_type":"HT|NMT|pre-NMT|LLM|unknown",
//    "system_id"?,"dataset_tag"?}
// Keys are written in this order; optional keys are omitted when unset.

std::string encode_corpus_record(const SegmentPair& pair);
// Throws InvalidArgument on malformed records or invalid pairs.
SegmentPair decode_corpus_record(std::string_view line);

// Throws InvalidArgument (unreadable file), ParseError (with line number),
// HeterogeneousDocument and DuplicateSegmentId. Blank lines are skipped.
Corpus load_corpus(const std::filesystem::path& path);
Corpus read_corpus(std::istream& in, const std::string& name);

// Writes documents in order, each document's pairs in order.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

struct AlignedImportOptions {
  std::string lang_x;
  std::string lang_y;
  Direction gold = Direction::kUnknown;
  TranslationType type = TranslationType::kUnknown;
  std::string doc_id = "doc";
  // One doc id per line, aligned with the text files.
  std::optional<std::filesystem::path> boundaries;
  std::optional<std::string> system_id;
  std::optional<std::string> dataset_tag;
};

// Line-aligned plain-text import. Line i of x_path pairs with line i of
// y_path; pair ids are "<doc_id>-<line>". Lines empty on both sides are
// skipped. Throws LineCountMismatch and OneSidedEmptyLine (1-based line).
Corpus import_aligned_files(const std::filesystem::path& x_path,
                            const std::filesystem::path& y_path,
                            const AlignedImportOptions& options);

}  // namespace transdir

#endif  // TRANSDIR_CORPUS_IO_H_
