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

#include "transdir/detection.h"

#include <cmath>
#include <vector>

#include "transdir/error.h"
#include "transdir/summation.h"

namespace transdir {

double seq_logprob(std::span<const double> token_logprobs) {
  if (token_logprobs.empty()) {
    throw InvalidArgument("log-probability of an empty token list");
  }
  return pairwise_sum(token_logprobs);
}

double seq_logprob(const TokenScores& scores) {
  return seq_logprob(scores.token_logprobs);
}

double avg_token_logprob(std::span<const double> token_logprobs) {
  return seq_logprob(token_logprobs) /
         static_cast<double>(token_logprobs.size());
}

double avg_token_logprob(const TokenScores& scores) {
  return avg_token_logprob(scores.token_logprobs);
}

double doc_avg_token_logprob(std::span<const TokenScores> segments) {
  if (segments.empty()) throw EmptyDocument("document has no segments");
  std::vector<double> sums;
  sums.reserve(segments.size());
  std::size_t count = 0;
  for (const TokenScores& s : segments) {
    if (s.token_logprobs.empty()) {
      throw InvalidArgument("segment with no tokens");
    }
    sums.push_back(seq_logprob(s));
    count += s.size();
  }
  return pairwise_sum(sums) / static_cast<double>(count);
}

DirectionScores DirectionScores::from_sums(double sum_xy, std::size_t count_xy,
                                           double sum_yx,
                                           std::size_t count_yx) {
  if (count_xy == 0 || count_yx == 0) {
    throw InvalidArgument("direction scores need positive token counts");
  }
  if (!std::isfinite(sum_xy) || !std::isfinite(sum_yx) || sum_xy > 0.0 ||
      sum_yx > 0.0) {
    throw InvalidArgument("direction score sums must be finite and <= 0");
  }
  DirectionScores d;
  d.sum_xy = sum_xy;
  d.count_xy = count_xy;
  d.sum_yx = sum_yx;
  d.count_yx = count_yx;
  d.logp_tok_xy = sum_xy / static_cast<double>(count_xy);
  d.logp_tok_yx = sum_yx / static_cast<double>(count_yx);
  return d;
}

DirectionScores DirectionScores::swapped() const {
  DirectionScores d;
  d.logp_tok_xy = logp_tok_yx;
  d.logp_tok_yx = logp_tok_xy;
  d.sum_xy = sum_yx;
  d.count_xy = count_yx;
  d.sum_yx = sum_xy;
  d.count_yx = count_xy;
  return d;
}

DirectionScores make_direction_scores(const TokenScores& xy,
                                      const TokenScores& yx) {
  if (xy.src_lang != yx.tgt_lang || xy.tgt_lang != yx.src_lang) {
    throw MismatchedPair("scores " + xy.src_lang + "->" + xy.tgt_lang +
                         " and " + yx.src_lang + "->" + yx.tgt_lang +
                         " are not opposite directions");
  }
  validate(xy);
  validate(yx);
  return DirectionScores::from_sums(seq_logprob(xy), xy.size(),
                                    seq_logprob(yx), yx.size());
}

DirectionVerdict verdict_from_averages(double avg_xy, double avg_yx) {
  DirectionVerdict v;
  v.log_margin = avg_xy - avg_yx;
  v.prob_ratio = std::exp(v.log_margin);
  v.tie = v.log_margin == 0.0;
  v.predicted = v.log_margin > 0.0 ? Direction::kX2Y : Direction::kY2X;
  return v;
}

DirectionVerdict detect_sentence(const TokenScores& xy, const TokenScores& yx) {
  return detect_sentence(make_direction_scores(xy, yx));
}

DirectionVerdict detect_sentence(const DirectionScores& scores) {
  return verdict_from_averages(scores.logp_tok_xy, scores.logp_tok_yx);
}

PooledScores pool(std::span<const DirectionScores> segments,
                  std::span<const std::uint8_t> swap) {
  if (!swap.empty() && swap.size() != segments.size()) {
    throw InvalidArgument("swap mask length does not match segment count");
  }
  PooledScores p;
  const auto flipped = [&](std::size_t i) { return !swap.empty() && swap[i]; };
  if (segments.size() <= kPairwiseBlock) {
    // Same left-to-right order pairwise_sum uses at this size.
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const DirectionScores& s = segments[i];
      if (flipped(i)) {
        p.sum_xy += s.sum_yx;
        p.count_xy += s.count_yx;
        p.sum_yx += s.sum_xy;
        p.count_yx += s.count_xy;
      } else {
        p.sum_xy += s.sum_xy;
        p.count_xy += s.count_xy;
        p.sum_yx += s.sum_yx;
        p.count_yx += s.count_yx;
      }
    }
    return p;
  }
  std::vector<double> xy(segments.size()), yx(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const DirectionScores& s = segments[i];
    const bool f = flipped(i);
    xy[i] = f ? s.sum_yx : s.sum_xy;
    yx[i] = f ? s.sum_xy : s.sum_yx;
    p.count_xy += f ? s.count_yx : s.count_xy;
    p.count_yx += f ? s.count_xy : s.count_yx;
  }
  p.sum_xy = pairwise_sum(xy);
  p.sum_yx = pairwise_sum(yx);
  return p;
}

DirectionVerdict detect_document(std::span<const DirectionScores> segments) {
  if (segments.empty()) throw EmptyDocument("document has no segments");
  const PooledScores p = pool(segments);
  return verdict_from_averages(p.logp_tok_xy(), p.logp_tok_yx());
}

}  // namespace transdir
