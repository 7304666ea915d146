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

#ifndef TRANSDIR_SCORER_H_
#define TRANSDIR_SCORER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "transdir/cache_key.h"
#include "transdir/score_cache.h"
#include "transdir/scorer_backend.h"
#include "transdir/segment.h"
#include "transdir/token_scores.h"

namespace transdir {

inline constexpr std::size_t kDefaultBatchSize = 32;

struct BidirectionalScores {
  TokenScores xy;  // P(text_y | text_x), direction lang_x -> lang_y
  TokenScores yx;  // P(text_x | text_y), direction lang_y -> lang_x
};

// Obtains TokenScores through a backend, caching every result in memory and,
// if a ScoreCache is attached, on disk before it is returned. Repeated
// requests for the same logical input never reach the backend again.
class Scorer {
 public:
  explicit Scorer(ScorerBackend& backend, ScoreCache* disk_cache = nullptr,
                  std::size_t batch_size = kDefaultBatchSize);

  // Throws ScorerUnavailable / ScorerError / ProtocolViolation / InvalidScores
  // (all ScoringFailure) with request_id() set when known.
  TokenScores score_pair(const ScoreRequest& request);

  // Fails as a whole if either direction fails.
  BidirectionalScores score_bidirectional(const SegmentPair& pair);

  // Scores both directions of every pair, sending cache misses to the
  // backend in batches of batch_size(). Request ids are
  // "<pair_id>/xy" and "<pair_id>/yx".
  std::vector<BidirectionalScores> score_pairs(
      std::span<const SegmentPair> pairs);

  const std::string& scorer_id() const { return backend_.scorer_id(); }
  std::size_t batch_size() const { return batch_size_; }
  std::size_t memory_hits() const { return memory_hits_; }
  std::size_t disk_hits() const { return disk_hits_; }

 private:
  struct Pending {
    CacheKey key;
    ScoreRequest request;
  };

  CacheKey key_for(const ScoreRequest& request) const;
  const TokenScores* lookup(const CacheKey& key, const ScoreRequest& request);
  void fetch(std::vector<Pending> misses);

  ScorerBackend& backend_;
  ScoreCache* disk_cache_;
  std::size_t batch_size_;
  std::unordered_map<CacheKey, TokenScores, CacheKeyHash> memory_;
  std::size_t memory_hits_ = 0;
  std::size_t disk_hits_ = 0;
};

// Builds the two requests for a pair: x -> y and y -> x.
ScoreRequest forward_request(const SegmentPair& pair);
ScoreRequest backward_request(const SegmentPair& pair);

// Recovers the pair id from a request id built by forward/backward_request.
std::string_view pair_id_of_request(std::string_view request_id);

}  // namespace transdir

#endif  // TRANSDIR_SCORER_H_
