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

#ifndef TRANSDIR_SCORE_STORE_H_
#define TRANSDIR_SCORE_STORE_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>

#include "transdir/cache_key.h"
#include "transdir/score_record.h"

namespace transdir {

// In-memory map from CacheKey to score record. Immutable once loaded; safe to
// share across threads for reading.
class ScoreStore {
 public:
  // Identical duplicates are dropped; a duplicate key with a different payload
  // throws ConflictingDuplicate naming `where`.
  void insert(ScoreRecord record, const std::string& where);

  const ScoreRecord* find(const CacheKey& key) const;
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  std::set<std::string> scorer_ids() const;

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

 private:
  std::unordered_map<CacheKey, ScoreRecord, CacheKeyHash> records_;
};

// Reads a newline-delimited score file. Blank lines are ignored. Throws
// ScorerUnavailable if the file cannot be opened, ParseError (with the 1-based
// line number) on malformed or invalid records, and ConflictingDuplicate.
ScoreStore load_score_file(const std::filesystem::path& path);

}  // namespace transdir

#endif  // TRANSDIR_SCORE_STORE_H_
