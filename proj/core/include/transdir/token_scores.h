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

#ifndef TRANSDIR_TOKEN_SCORES_H_
#define TRANSDIR_TOKEN_SCORES_H_

#include <optional>
#include <string>
#include <vector>

namespace transdir {

// Per-token natural-log probabilities log p(y_j | y_<j, x) of one target
// segment given one source segment, as produced by one scorer.
struct TokenScores {
  std::vector<double> token_logprobs;
  std::optional<std::vector<std::string>> tokens;  // diagnostic only
  std::string scorer_id;
  std::string src_lang;
  std::string tgt_lang;

  std::size_t size() const { return token_logprobs.size(); }

  friend bool operator==(const TokenScores&, const TokenScores&) = default;
};

// Throws InvalidScores unless: at least one logprob; every logprob finite and
// <= 0; tokens (if present) has the same length.
void validate(const TokenScores& scores);

// Same checks on a bare logprob list. `context` prefixes the message.
void validate_logprobs(const std::vector<double>& logprobs,
                       const std::string& context);

// True if the two lists are identical bit for bit (so -0.0 != 0.0).
bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b);

struct ScoreRequest {
  std::string id;
  std::string src_lang;
  std::string tgt_lang;
  std::string source;
  std::string target;
};

// Throws InvalidArgument if the id is empty or source/target are blank.
void validate(const ScoreRequest& request);

struct ScoreResponse {
  std::string id;
  std::optional<std::vector<double>> token_logprobs;
  std::optional<std::vector<std::string>> tokens;
  std::optional<std::string> error;
};

}  // namespace transdir

#endif  // TRANSDIR_TOKEN_SCORES_H_
