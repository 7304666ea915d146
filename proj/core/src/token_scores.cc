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

#include "transdir/token_scores.h"

#include <bit>
#include <cmath>
#include <cstdint>

#include "transdir/error.h"
#include "transdir/text.h"

namespace transdir {

void validate_logprobs(const std::vector<double>& logprobs,
                       const std::string& context) {
  if (logprobs.empty()) {
    throw InvalidScores(context + ": empty token_logprobs");
  }
  for (std::size_t i = 0; i < logprobs.size(); ++i) {
    const double lp = logprobs[i];
    if (!std::isfinite(lp)) {
      throw InvalidScores(context + ": non-finite logprob at token " +
                          std::to_string(i));
    }
    if (lp > 0.0) {
      throw InvalidScores(context + ": positive logprob at token " +
                          std::to_string(i));
    }
  }
}

void validate(const TokenScores& scores) {
  const std::string context =
      "scores " + scores.src_lang + "->" + scores.tgt_lang;
  validate_logprobs(scores.token_logprobs, context);
  if (scores.tokens && scores.tokens->size() != scores.token_logprobs.size()) {
    throw InvalidScores(context + ": " + std::to_string(scores.tokens->size()) +
                        " tokens but " +
                        std::to_string(scores.token_logprobs.size()) +
                        " logprobs");
  }
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) !=
        std::bit_cast<std::uint64_t>(b[i])) {
      return false;
    }
  }
  return true;
}

void validate(const ScoreRequest& request) {
  if (request.id.empty()) throw InvalidArgument("score request without id");
  if (is_blank(request.source) || is_blank(request.target)) {
    throw InvalidArgument("score request " + request.id +
                          ": source and target must be non-empty");
  }
  if (request.src_lang.empty() || request.tgt_lang.empty()) {
    throw InvalidArgument("score request " + request.id +
                          ": missing language code");
  }
}

}  // namespace transdir
