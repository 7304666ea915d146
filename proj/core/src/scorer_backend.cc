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

#include "transdir/scorer_backend.h"

#include <unordered_set>

#include "transdir/error.h"

namespace transdir {

std::vector<ScoreResponse> ScorerBackend::score_batch(
    std::span<const ScoreRequest> requests) {
  std::unordered_set<std::string> ids;
  for (const auto& r : requests) {
    if (!ids.insert(r.id).second) {
      throw InvalidArgument("duplicate request id in batch: " + r.id);
    }
  }
  requests_served_ += requests.size();
  return do_score_batch(requests);
}

StoreBackend::StoreBackend(ScoreStore store,
                           std::optional<std::string> scorer_id)
    : store_(std::move(store)) {
  if (scorer_id) {
    scorer_id_ = std::move(*scorer_id);
    return;
  }
  const auto ids = store_.scorer_ids();
  if (ids.empty()) throw ScorerUnavailable("score store is empty");
  if (ids.size() > 1) {
    std::string all;
    for (const auto& id : ids) all += (all.empty() ? "" : ", ") + id;
    throw InvalidArgument("score store holds several scorers (" + all +
                          "); choose one with --scorer-id");
  }
  scorer_id_ = *ids.begin();
}

std::vector<ScoreResponse> StoreBackend::do_score_batch(
    std::span<const ScoreRequest> requests) {
  std::vector<ScoreResponse> out;
  out.reserve(requests.size());
  for (const auto& req : requests) {
    const CacheKey key = make_cache_key(scorer_id_, req.src_lang, req.tgt_lang,
                                        req.source, req.target);
    const ScoreRecord* record = store_.find(key);
    if (!record) {
      throw ScorerUnavailable("no stored scores for direction " +
                              req.src_lang + "->" + req.tgt_lang +
                              " (request " + req.id + ", scorer " +
                              scorer_id_ + ")",
                              req.id);
    }
    out.push_back(ScoreResponse{req.id, record->token_logprobs, record->tokens,
                                std::nullopt});
  }
  return out;
}

}  // namespace transdir
