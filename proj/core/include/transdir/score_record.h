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

#ifndef TRANSDIR_SCORE_RECORD_H_
#define TRANSDIR_SCORE_RECORD_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transdir/cache_key.h"
#include "transdir/token_scores.h"

namespace transdir {

// One line of a score file, and the payload of one cache entry:
//   {"scorer_id","src_lang","tgt_lang","source","target","token_logprobs",
//    "tokens"?}
struct ScoreRecord {
  std::string scorer_id;
  std::string src_lang;
  std::string tgt_lang;
  std::string source;
  std::string target;
  std::vector<double> token_logprobs;
  std::optional<std::vector<std::string>> tokens;

  CacheKey key() const;
  TokenScores to_token_scores() const;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

ScoreRecord make_score_record(const ScoreRequest& request,
                              const TokenScores& scores);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// Serializes to a single JSON line without the trailing newline. Logprobs are
// written with format_double() so that decode(encode(r)) is bit-exact.
std::string encode_record(const ScoreRecord& record);

// Throws InvalidArgument on malformed JSON or missing/mistyped fields, and
// InvalidScores if the logprobs violate the TokenScores invariants.
ScoreRecord decode_record(std::string_view line);

// True if the line carries a bare NaN / Infinity literal, which JSON cannot
// represent but some emitters produce for non-finite floats.
bool has_non_finite_literal(std::string_view line);

}  // namespace transdir

#endif  // TRANSDIR_SCORE_RECORD_H_
