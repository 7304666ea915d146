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

#ifndef TRANSDIR_SEGMENT_H_
#define TRANSDIR_SEGMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "transdir/types.h"

namespace transdir {

// One aligned sentence pair (x, y) with its annotations.
struct SegmentPair {
  std::string pair_id;
  std::string doc_id;
  std::string text_x;
  std::string text_y;
  std::string lang_x;
  std::string lang_y;
  Direction gold_direction = Direction::kUnknown;
  TranslationType translation_type = TranslationType::kUnknown;
  std::optional<std::string> system_id;
  std::optional<std::string> dataset_tag;

  friend bool operator==(const SegmentPair&, const SegmentPair&) = default;
};

// Throws InvalidArgument: empty ids, blank or ill-formed texts, missing or
// equal languages.
void validate(const SegmentPair& pair);

// Character length of the gold source side, counted in Unicode scalar
// values. For gold NONE / UNKNOWN side X is used and `used_fallback` (if
// given) is set.
std::size_t source_char_length(const SegmentPair& pair,
                               bool* used_fallback = nullptr);

// Ordered, 1:1-aligned segments sharing doc id, languages and gold direction.
struct Document {
  std::string doc_id;
  std::vector<SegmentPair> pairs;

  std::size_t size() const { return pairs.size(); }
  const std::string& lang_x() const { return pairs.front().lang_x; }
  const std::string& lang_y() const { return pairs.front().lang_y; }
  Direction gold_direction() const { return pairs.front().gold_direction; }

  friend bool operator==(const Document&, const Document&) = default;
};

// Throws EmptyDocument or HeterogeneousDocument.
void validate(const Document& doc);

}  // namespace transdir

#endif  // TRANSDIR_SEGMENT_H_
