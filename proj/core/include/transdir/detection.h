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

#ifndef TRANSDIR_DETECTION_H_
#define TRANSDIR_DETECTION_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "transdir/token_scores.h"
#include "transdir/types.h"

namespace transdir {

// log P(y|x): the sum of per-token logprobs. Working in the log domain turns
// the product over tokens into a sum and avoids underflow on long segments.
// Empty lists are rejected here and below with InvalidArgument.
double seq_logprob(std::span<const double> token_logprobs);
double seq_logprob(const TokenScores& scores);

// log P_tok(y|x) = seq_logprob / |y|, i.e. the log of the geometric mean of
// the token probabilities.
double avg_token_logprob(std::span<const double> token_logprobs);
double avg_token_logprob(const TokenScores& scores);

// Document-level average: total logprob over total token count across all
// segments (token-count weighted, not a mean of per-segment averages).
// Throws EmptyDocument on an empty list.
double doc_avg_token_logprob(std::span<const TokenScores> segments);

// Sufficient statistics of one segment pair in both directions. Raw sums and
// counts are kept so that alternative normalizations remain possible.
struct DirectionScores {
  double logp_tok_xy = 0.0;  // log P_tok(y|x) = sum_xy / count_xy
  double logp_tok_yx = 0.0;  // log P_tok(x|y) = sum_yx / count_yx
  double sum_xy = 0.0;
  std::size_t count_xy = 1;  // |y|
  double sum_yx = 0.0;
  std::size_t count_yx = 1;  // |x|

  // Throws InvalidArgument unless counts are positive and sums finite, <= 0.
  static DirectionScores from_sums(double sum_xy, std::size_t count_xy,
                                   double sum_yx, std::size_t count_yx);

  // The same segment seen from the other side.
  DirectionScores swapped() const;

  friend bool operator==(const DirectionScores&,
                         const DirectionScores&) = default;
};

// Throws MismatchedPair unless xy and yx score opposite directions of the
// same language pair.
DirectionScores make_direction_scores(const TokenScores& xy,
                                      const TokenScores& yx);

struct DirectionVerdict {
  Direction predicted = Direction::kY2X;  // kX2Y or kY2X only
  bool tie = false;
  double log_margin = 0.0;  // log P_tok(y|x) - log P_tok(x|y)
  double prob_ratio = 1.0;  // exp(log_margin)

  friend bool operator==(const DirectionVerdict&,
                         const DirectionVerdict&) = default;
};

// X2Y iff avg_xy > avg_yx; otherwise Y2X, with `tie` set on equality.
DirectionVerdict verdict_from_averages(double avg_xy, double avg_yx);

DirectionVerdict detect_sentence(const TokenScores& xy, const TokenScores& yx);
DirectionVerdict detect_sentence(const DirectionScores& scores);

// Pooled document statistics. If `swap` is non-empty it must have one entry
// per segment; segments with a non-zero entry contribute with their
// directions exchanged (sum and count travel together).
struct PooledScores {
  double sum_xy = 0.0;
  std::size_t count_xy = 0;
  double sum_yx = 0.0;
  std::size_t count_yx = 0;

  double logp_tok_xy() const { return sum_xy / static_cast<double>(count_xy); }
  double logp_tok_yx() const { return sum_yx / static_cast<double>(count_yx); }
  double log_margin() const { return logp_tok_xy() - logp_tok_yx(); }
};

PooledScores pool(std::span<const DirectionScores> segments,
                  std::span<const std::uint8_t> swap = {});

// Applies the sentence rule to the pooled averages. Throws EmptyDocument.
DirectionVerdict detect_document(std::span<const DirectionScores> segments);

}  // namespace transdir

#endif  // TRANSDIR_DETECTION_H_
