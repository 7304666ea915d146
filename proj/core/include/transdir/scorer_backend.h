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

#ifndef TRANSDIR_SCORER_BACKEND_H_
#define TRANSDIR_SCORER_BACKEND_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transdir/score_store.h"
#include "transdir/token_scores.h"

namespace transdir {

// Source of per-token conditional logprobs. Backends are not reentrant: one
// handle must be driven by one flow at a time.
class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;

  virtual const std::string& scorer_id() const = 0;

  // Returns one response per request, in request order. Request ids must be
  // unique within the batch. Per-request failures come back as responses
  // with `error` set; transport failures throw ScoringFailure subclasses.
  std::vector<ScoreResponse> score_batch(std::span<const ScoreRequest> requests);

  // Number of requests that reached the backend so far.
  std::size_t requests_served() const { return requests_served_; }

 protected:
  virtual std::vector<ScoreResponse> do_score_batch(
      std::span<const ScoreRequest> requests) = 0;

 private:
  std::size_t requests_served_ = 0;
};

// Serves precomputed scores from a ScoreStore (a score file or a snapshot of a
// cache directory). A request without a stored record throws
// ScorerUnavailable naming the missing direction.
class StoreBackend : public ScorerBackend {
 public:
  // If `scorer_id` is not given, the store must contain records from exactly
  // one scorer, whose id is used.
  explicit StoreBackend(ScoreStore store,
                        std::optional<std::string> scorer_id = std::nullopt);

  const std::string& scorer_id() const override { return scorer_id_; }
  const ScoreStore& store() const { return store_; }

 protected:
  std::vector<ScoreResponse> do_score_batch(
      std::span<const ScoreRequest> requests) override;

 private:
  ScoreStore store_;
  std::string scorer_id_;
};

}  // namespace transdir

#endif  // TRANSDIR_SCORER_BACKEND_H_
