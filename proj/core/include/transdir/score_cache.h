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

#ifndef TRANSDIR_SCORE_CACHE_H_
#define TRANSDIR_SCORE_CACHE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "transdir/cache_key.h"
#include "transdir/score_record.h"
#include "transdir/score_store.h"

namespace transdir {

// On-disk content-addressed cache: one file per entry, named by the
// lowercase-hex digest of its key, holding one score-file record.
//
// Writes go to a unique temporary file in the same directory and are then
// renamed over the final name, so concurrent writers (threads or processes)
// never expose a partial entry.
class ScoreCache {
 public:
  // Creates the directory if needed.
  explicit ScoreCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const CacheKey& key) const;

  // Throws ParseError if the entry exists but is unreadable or was written
  // under a different key.
  std::optional<ScoreRecord> get(const CacheKey& key) const;
  void put(const ScoreRecord& record);

  // Digests of all complete entries, sorted.
  std::vector<CacheKey> keys() const;

  // Removes all entries (and stray temporaries). Returns entries removed.
  std::size_t clear();

  // Writes every record of the store. Returns the number written.
  std::size_t import(const ScoreStore& store);

  ScoreStore load_all() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace transdir

#endif  // TRANSDIR_SCORE_CACHE_H_
