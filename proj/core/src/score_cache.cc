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

#include "transdir/score_cache.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "transdir/error.h"

namespace transdir {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kTempMarker = ".tmp.";

std::string temp_suffix() {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream os;
  os << kTempMarker << ::getpid() << '.'
     << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
     << counter.fetch_add(1);
  return os.str();
}

}  // namespace

ScoreCache::ScoreCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw InvalidArgument("cannot create cache directory " + dir_.string() +
                          (ec ? ": " + ec.message() : ""));
  }
}

fs::path ScoreCache::entry_path(const CacheKey& key) const {
  return dir_ / key.hex();
}

std::optional<ScoreRecord> ScoreCache::get(const CacheKey& key) const {
  const fs::path path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  ScoreRecord record;
  try {
    record = decode_record(line);
  } catch (const Error& e) {
    throw ParseError(path.string(), 1, e.what());
  }
  if (record.key() != key) {
    throw ParseError(path.string(), 1, "entry does not match its digest");
  }
  return record;
}

void ScoreCache::put(const ScoreRecord& record) {
  const fs::path final_path = entry_path(record.key());
  fs::path tmp = final_path;
  tmp += temp_suffix();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << encode_record(record) << '\n';
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw InvalidArgument("cannot write cache entry " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw InvalidArgument("cannot publish cache entry " + final_path.string() +
                          ": " + ec.message());
  }
}

std::vector<CacheKey> ScoreCache::keys() const {
  std::vector<CacheKey> out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    if (auto key = CacheKey::from_hex(entry.path().filename().string())) {
      out.push_back(*key);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ScoreCache::clear() {
  std::size_t removed = 0;
  std::vector<fs::path> doomed;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (CacheKey::from_hex(name)) {
      doomed.push_back(entry.path());
      ++removed;
    } else if (name.find(kTempMarker) != std::string::npos) {
      doomed.push_back(entry.path());
    }
  }
  for (const auto& p : doomed) fs::remove(p);
  return removed;
}

std::size_t ScoreCache::import(const ScoreStore& store) {
  std::size_t written = 0;
  for (const auto& [key, record] : store) {
    put(record);
    ++written;
  }
  return written;
}

ScoreStore ScoreCache::load_all() const {
  ScoreStore store;
  for (const CacheKey& key : keys()) {
    if (auto record = get(key)) {
      store.insert(std::move(*record), entry_path(key).string());
    }
  }
  return store;
}

}  // namespace transdir
