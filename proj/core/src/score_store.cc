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

#include "transdir/score_store.h"

#include <fstream>

#include "transdir/error.h"
#include "transdir/text.h"

namespace transdir {

void ScoreStore::insert(ScoreRecord record, const std::string& where) {
  const CacheKey key = record.key();
  auto [it, inserted] = records_.try_emplace(key, std::move(record));
  if (inserted) return;
  const ScoreRecord& existing = it->second;
  const ScoreRecord& incoming = record;
  if (!bitwise_equal(existing.token_logprobs, incoming.token_logprobs) ||
      existing.tokens != incoming.tokens) {
    throw ConflictingDuplicate(key.hex(), where);
  }
}

const ScoreRecord* ScoreStore::find(const CacheKey& key) const {
  auto it = records_.find(key);
  return it == records_.end() ? nullptr : &it->second;
}

std::set<std::string> ScoreStore::scorer_ids() const {
  std::set<std::string> ids;
  for (const auto& [key, record] : records_) ids.insert(record.scorer_id);
  return ids;
}

ScoreStore load_score_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScorerUnavailable("cannot open score file " + path.string());

  ScoreStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    ScoreRecord record;
    try {
      record = decode_record(line);
    } catch (const Error& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
    store.insert(std::move(record),
                 path.string() + ":" + std::to_string(line_no));
  }
  return store;
}

}  // namespace transdir
