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

#include "transdir/segment.h"

#include "transdir/error.h"
#include "transdir/text.h"

namespace transdir {

void validate(const SegmentPair& p) {
  const std::string who = "pair '" + p.pair_id + "'";
  if (p.pair_id.empty()) throw InvalidArgument("pair without pair_id");
  if (p.doc_id.empty()) throw InvalidArgument(who + ": empty doc_id");
  if (p.lang_x.empty() || p.lang_y.empty()) {
    throw InvalidArgument(who + ": missing language code");
  }
  if (p.lang_x == p.lang_y) {
    throw InvalidArgument(who + ": lang_x and lang_y are both '" + p.lang_x +
                          "'");
  }
  if (is_blank(p.text_x) || is_blank(p.text_y)) {
    throw InvalidArgument(who + ": empty text");
  }
  if (!is_valid_utf8(p.text_x) || !is_valid_utf8(p.text_y)) {
    throw InvalidArgument(who + ": text is not valid UTF-8");
  }
}

std::size_t source_char_length(const SegmentPair& pair, bool* used_fallback) {
  const bool y_is_source = pair.gold_direction == Direction::kY2X;
  const bool fallback = pair.gold_direction == Direction::kNone ||
                        pair.gold_direction == Direction::kUnknown;
  if (used_fallback) *used_fallback = fallback;
  return utf8_scalar_count(y_is_source ? pair.text_y : pair.text_x);
}

void validate(const Document& doc) {
  if (doc.pairs.empty()) {
    throw EmptyDocument("document '" + doc.doc_id + "' has no segments");
  }
  const SegmentPair& first = doc.pairs.front();
  for (const SegmentPair& p : doc.pairs) {
    const std::string who =
        "document '" + doc.doc_id + "', pair '" + p.pair_id + "'";
    if (p.doc_id != doc.doc_id) {
      throw HeterogeneousDocument(who + ": doc_id '" + p.doc_id + "'");
    }
    if (p.lang_x != first.lang_x || p.lang_y != first.lang_y) {
      throw HeterogeneousDocument(who + ": language pair " + p.lang_x + "-" +
                                  p.lang_y + " differs from " + first.lang_x +
                                  "-" + first.lang_y);
    }
    if (p.gold_direction != first.gold_direction) {
      throw HeterogeneousDocument(
          who + ": gold_direction " + std::string(to_string(p.gold_direction)) +
          " differs from " + std::string(to_string(first.gold_direction)));
    }
  }
}

}  // namespace transdir
