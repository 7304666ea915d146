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

#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "test_util.h"
#include "transdir/error.h"
#include "transdir/score_record.h"
#include "transdir/score_store.h"

namespace transdir {
namespace {

using testing::TempDir;

ScoreRecord record(const std::string& target, std::vector<double> lp) {
  return ScoreRecord{"m", "en", "de", "src", target, std::move(lp),
                     std::nullopt};
}

TEST(ScoreCacheTest, MissThenHit) {
  TempDir dir;
  ScoreCache cache(dir / "cache");
  const ScoreRecord r = record("t", {-0.5, -0.25});
  EXPECT_FALSE(cache.get(r.key()).has_value());
  cache.put(r);
  EXPECT_EQ(cache.get(r.key()), r);
  EXPECT_TRUE(std::filesystem::exists(dir / "cache" / r.key().hex()));
}

TEST(ScoreCacheTest, EntryIsOneScoreFileRecord) {
  TempDir dir;
  ScoreCache cache(dir.path());
  const ScoreRecord r = record("t", {-1.5});
  cache.put(r);
  EXPECT_EQ(testing::read_file(cache.entry_path(r.key())),
            encode_record(r) + "\n");
}

TEST(ScoreCacheTest, RoundTripIsBitExact) {
  TempDir dir;
  ScoreCache cache(dir.path());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const ScoreRecord r = record(std::to_string(i),
                                 testing::random_logprobs(rng, 1 + i % 17));
    cache.put(r);
    const auto back = cache.get(r.key());
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(bitwise_equal(back->token_logprobs, r.token_logprobs));
  }
}

TEST(ScoreCacheTest, CorruptEntryIsReported) {
  TempDir dir;
  ScoreCache cache(dir.path());
  const ScoreRecord r = record("t", {-1.0});
  testing::write_file(cache.entry_path(r.key()), "{garbage\n");
  EXPECT_THROW(cache.get(r.key()), ParseError);
}

TEST(ScoreCacheTest, EntryUnderWrongNameIsReported) {
  TempDir dir;
  ScoreCache cache(dir.path());
  const ScoreRecord a = record("a", {-1.0});
  const ScoreRecord b = record("b", {-1.0});
  testing::write_file(cache.entry_path(a.key()), encode_record(b) + "\n");
  EXPECT_THROW(cache.get(a.key()), ParseError);
}

TEST(ScoreCacheTest, KeysSkipTemporariesAndClearRemovesAll) {
  TempDir dir;
  ScoreCache cache(dir.path());
  cache.put(record("a", {-1.0}));
  cache.put(record("b", {-2.0}));
  testing::write_file(dir / (record("c", {-1}).key().hex() + ".tmp.1.2.3"),
                      "partial");
  testing::write_file(dir / "README", "not an entry");
  const auto keys = cache.keys();
  ASSERT_EQ(keys.size(), 2u);
  EXPECT_LT(keys[0], keys[1]);
  EXPECT_EQ(cache.clear(), 2u);
  EXPECT_TRUE(cache.keys().empty());
  EXPECT_FALSE(std::filesystem::exists(
      dir / (record("c", {-1}).key().hex() + ".tmp.1.2.3")));
}

TEST(ScoreCacheTest, ImportAndLoadAll) {
  TempDir dir;
  ScoreStore store;
  store.insert(record("a", {-1.0}), "test");
  store.insert(record("b", {-2.0}), "test");
  ScoreCache cache(dir.path());
  EXPECT_EQ(cache.import(store), 2u);
  const ScoreStore back = cache.load_all();
  EXPECT_EQ(back.size(), 2u);
  EXPECT_NE(back.find(record("a", {}).key()), nullptr);
}

// Many threads writing the same entries never expose a partial file.
TEST(ScoreCacheTest, ConcurrentWritersAreSafe) {
  TempDir dir;
  ScoreCache cache(dir.path());
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 20; ++i) {
    records.push_back(record(std::to_string(i), std::vector<double>(64, -0.1 * (i + 1))));
  }
  std::vector<std::thread> threads;
  std::atomic<int> bad{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int round = 0; round < 10; ++round) {
        for (const ScoreRecord& r : records) {
          cache.put(r);
          try {
            auto got = cache.get(r.key());
            if (!got || !(*got == r)) ++bad;
          } catch (const Error&) {
            ++bad;
          }
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(bad.load(), 0);
  EXPECT_EQ(cache.keys().size(), records.size());
}

}  // namespace
}  // namespace transdir
