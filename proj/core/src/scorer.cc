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

#include "transdir/scorer.h"

#include <unordered_set>

#include "transdir/error.h"

namespace transdir {

Scorer::Scorer(ScorerBackend& backend, ScoreCache* disk_cache,
               std::size_t batch_size)
    : backend_(backend), disk_cache_(disk_cache), batch_size_(batch_size) {
  if (batch_size_ == 0) throw InvalidArgument("batch size must be >= 1");
}

CacheKey Scorer::key_for(const ScoreRequest& request) const {
  return make_cache_key(backend_.scorer_id(), request.src_lang,
                        request.tgt_lang, request.source, request.target);
}

const TokenScores* Scorer::lookup(const CacheKey& key,
                                  const ScoreRequest& request) {
  if (auto it = memory_.find(key); it != memory_.end()) {
    ++memory_hits_;
    return &it->second;
  }
  if (disk_cache_) {
    if (auto record = disk_cache_->get(key)) {
      ++disk_hits_;
      TokenScores scores = record->to_token_scores();
      scores.src_lang = request.src_lang;
      scores.tgt_lang = request.tgt_lang;
      return &memory_.emplace(key, std::move(scores)).first->second;
    }
  }
  return nullptr;
}

void Scorer::fetch(std::vector<Pending> misses) {
  for (std::size_t start = 0; start < misses.size(); start += batch_size_) {
    const std::size_t end = std::min(misses.size(), start + batch_size_);
    std::vector<ScoreRequest> batch;
    batch.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) batch.push_back(misses[i].request);

    const std::vector<ScoreResponse> responses = backend_.score_batch(batch);
    if (responses.size() != batch.size()) {
      throw ProtocolViolation("backend returned " +
                              std::to_string(responses.size()) +
                              " responses for " + std::to_string(batch.size()) +
                              " requests");
    }
    // Validate the whole batch before caching any of it.
    std::vector<TokenScores> results;
    results.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const ScoreRequest& req = batch[i];
      const ScoreResponse& resp = responses[i];
      if (resp.error) throw ScorerError(*resp.error, req.id);
      if (!resp.token_logprobs) {
        throw ProtocolViolation("response without token_logprobs", req.id);
      }
      TokenScores scores{*resp.token_logprobs, resp.tokens,
                         backend_.scorer_id(), req.src_lang, req.tgt_lang};
      try {
        validate(scores);
      } catch (const InvalidScores& e) {
        throw InvalidScores(std::string(e.what()) + " (request " + req.id + ")",
                            req.id);
      }
      results.push_back(std::move(scores));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Pending& p = misses[start + i];
      if (disk_cache_) disk_cache_->put(make_score_record(p.request, results[i]));
      memory_.insert_or_assign(p.key, std::move(results[i]));
    }
  }
}

TokenScores Scorer::score_pair(const ScoreRequest& request) {
  validate(request);
  const CacheKey key = key_for(request);
  if (const TokenScores* hit = lookup(key, request)) return *hit;
  fetch({Pending{key, request}});
  return memory_.at(key);
}

BidirectionalScores Scorer::score_bidirectional(const SegmentPair& pair) {
  auto all = score_pairs(std::span<const SegmentPair>(&pair, 1));
  return std::move(all.front());
}

std::vector<BidirectionalScores> Scorer::score_pairs(
    std::span<const SegmentPair> pairs) {
  std::vector<std::pair<CacheKey, CacheKey>> keys;
  keys.reserve(pairs.size());
  std::vector<Pending> misses;
  std::unordered_set<CacheKey, CacheKeyHash> queued;

  auto consider = [&](ScoreRequest req) {
    validate(req);
    CacheKey key = key_for(req);
    if (!lookup(key, req) && queued.insert(key).second) {
      misses.push_back(Pending{key, std::move(req)});
    }
    return key;
  };
  for (const SegmentPair& pair : pairs) {
    CacheKey fwd = consider(forward_request(pair));
    CacheKey bwd = consider(backward_request(pair));
    keys.emplace_back(fwd, bwd);
  }
  fetch(std::move(misses));

  std::vector<BidirectionalScores> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back(BidirectionalScores{memory_.at(keys[i].first),
                                      memory_.at(keys[i].second)});
  }
  return out;
}

ScoreRequest forward_request(const SegmentPair& pair) {
  return ScoreRequest{pair.pair_id + "/xy", pair.lang_x, pair.lang_y,
                      pair.text_x, pair.text_y};
}

ScoreRequest backward_request(const SegmentPair& pair) {
  return ScoreRequest{pair.pair_id + "/yx", pair.lang_y, pair.lang_x,
                      pair.text_y, pair.text_x};
}

std::string_view pair_id_of_request(std::string_view request_id) {
  if (request_id.ends_with("/xy") || request_id.ends_with("/yx")) {
    request_id.remove_suffix(3);
  }
  return request_id;
}

}  // namespace transdir
