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

#include <gtest/gtest.h>

#include "test_util.h"
#include "transdir/error.h"
#include "transdir/score_record.h"

namespace transdir {
namespace {

using testing::TempDir;
using testing::write_file;

std::string line(const std::string& target, const std::string& lp) {
  return R"({"scorer_id":"m","src_lang":"en","tgt_lang":"de","source":"Hello.","target":")" +
         target + R"(","token_logprobs":[)" + lp + "]}\n";
}

TEST(ScoreStoreTest, LoadsDistinctRecords) {
  TempDir dir;
  write_file(dir / "s.jsonl",
             line("a", "-0.2,-0.1") + "\n" + line("b", "-1") + line("c", "-2"));
  const ScoreStore store = load_score_file(dir / "s.jsonl");
  EXPECT_EQ(store.size(), 3u);
  const ScoreRecord* r =
      store.find(make_cache_key("m", "en", "de", "Hello.", "a"));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->token_logprobs, (std::vector<double>{-0.2, -0.1}));
  EXPECT_EQ(store.scorer_ids(), std::set<std::string>{"m"});
}

TEST(ScoreStoreTest, IdenticalDuplicatesCollapse) {
  TempDir dir;
  write_file(dir / "s.jsonl", line("a", "-0.5") + line("a", "-0.5"));
  EXPECT_EQ(load_score_file(dir / "s.jsonl").size(), 1u);
}

TEST(ScoreStoreTest, ConflictingDuplicateIsAnError) {
  TempDir dir;
  write_file(dir / "s.jsonl", line("a", "-0.5") + line("a", "-0.25"));
  EXPECT_THROW(load_score_file(dir / "s.jsonl"), ConflictingDuplicate);
}

TEST(ScoreStoreTest, SignedZeroCountsAsDifferent) {
  TempDir dir;
  write_file(dir / "s.jsonl", line("a", "0") + line("a", "-0.0"));
  EXPECT_THROW(load_score_file(dir / "s.jsonl"), ConflictingDuplicate);
}

TEST(ScoreStoreTest, ParseErrorCarriesLineNumber) {
  TempDir dir;
  write_file(dir / "s.jsonl", line("a", "-1") + "\n" + "{broken\n");
  try {
    load_score_file(dir / "s.jsonl");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ScoreStoreTest, InvalidLogprobIsAParseError) {
  TempDir dir;
  write_file(dir / "s.jsonl", line("a", "0.3"));
  EXPECT_THROW(load_score_file(dir / "s.jsonl"), ParseError);
}

TEST(ScoreStoreTest, MissingFileMeansNoScorer) {
  EXPECT_THROW(load_score_file("/nonexistent/scores.jsonl"), ScorerUnavailable);
}

}  // namespace
}  // namespace transdir
