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

#include <gtest/gtest.h>

#include <map>

#include "test_util.h"
#include "transdir/error.h"
#include "transdir/score_record.h"
#include "transdir/subprocess_backend.h"

namespace transdir {
namespace {

using testing::TempDir;

// Answers from a map keyed by target text; counts traffic.
class MapBackend : public ScorerBackend {
 public:
  std::map<std::string, std::vector<double>> scores;
  std::map<std::string, std::string> errors;
  std::size_t batches = 0;
  std::size_t max_batch = 0;

  const std::string& scorer_id() const override { return id_; }

 protected:
  std::vector<ScoreResponse> do_score_batch(
      std::span<const ScoreRequest> requests) override {
    ++batches;
    max_batch = std::max(max_batch, requests.size());
    std::vector<ScoreResponse> out;
    for (const ScoreRequest& r : requests) {
      ScoreResponse resp{r.id, std::nullopt, std::nullopt, std::nullopt};
      if (auto e = errors.find(r.target); e != errors.end()) {
        resp.error = e->second;
      } else if (auto s = scores.find(r.target); s != scores.end()) {
        resp.token_logprobs = s->second;
      } else {
        resp.error = "missing";
      }
      out.push_back(std::move(resp));
    }
    return out;
  }

 private:
  std::string id_ = "map";
};

SegmentPair make_pair(const std::string& id, const std::string& x,
                      const std::string& y) {
  SegmentPair p;
  p.pair_id = id;
  p.doc_id = "d";
  p.text_x = x;
  p.text_y = y;
  p.lang_x = "en";
  p.lang_y = "de";
  return p;
}

TEST(ScorerTest, FixturePassthrough) {
  MapBackend backend;
  backend.scores["Hallo."] = {-0.2, -0.1};
  Scorer scorer(backend);
  const TokenScores t = scorer.score_pair({"q1", "en", "de", "Hello.", "Hallo."});
  EXPECT_EQ(t.token_logprobs, (std::vector<double>{-0.2, -0.1}));
  EXPECT_EQ(t.scorer_id, "map");
  EXPECT_EQ(t.src_lang, "en");
  EXPECT_EQ(t.tgt_lang, "de");
}

TEST(ScorerTest, RepeatRequestIsServedFromMemory) {
  MapBackend backend;
  backend.scores["Hallo."] = {-0.2, -0.1};
  Scorer scorer(backend);
  const TokenScores a = scorer.score_pair({"q1", "en", "de", "Hello.", "Hallo."});
  const TokenScores b = scorer.score_pair({"q2", "en", "de", "Hello.", "Hallo."});
  EXPECT_EQ(a, b);
  EXPECT_EQ(backend.requests_served(), 1u);
  EXPECT_EQ(scorer.memory_hits(), 1u);
}

TEST(ScorerTest, ErrorReplyBecomesScorerError) {
  MapBackend backend;
  backend.errors["Hallo."] = "unsupported language";
  Scorer scorer(backend);
  try {
    scorer.score_pair({"q1", "en", "de", "Hello.", "Hallo."});
    FAIL() << "expected ScorerError";
  } catch (const ScorerError& e) {
    EXPECT_STREQ(e.what(), "unsupported language");
    EXPECT_EQ(e.request_id(), "q1");
  }
}

TEST(ScorerTest, InvalidScoresAreNotCached) {
  TempDir dir;
  ScoreCache cache(dir.path());
  MapBackend backend;
  backend.scores["a"] = {-1.0};
  backend.scores["a2"] = {-1.0};
  backend.scores["b2"] = {-1.0};
  backend.scores["b"] = {0.5};  // p2's backward direction
  Scorer scorer(backend, &cache);
  const std::vector<SegmentPair> pairs = {make_pair("p1", "a", "a2"),
                                          make_pair("p2", "b", "b2")};
  try {
    scorer.score_pairs(pairs);
    FAIL() << "expected InvalidScores";
  } catch (const InvalidScores& e) {
    EXPECT_EQ(e.request_id(), "p2/yx");
  }
  EXPECT_TRUE(cache.keys().empty());
}

TEST(ScorerTest, BidirectionalSwapsLanguages) {
  MapBackend backend;
  backend.scores["b"] = {-1.0};
  backend.scores["a"] = {-2.0};
  Scorer scorer(backend);
  const BidirectionalScores s = scorer.score_bidirectional(make_pair("p", "a", "b"));
  EXPECT_EQ(s.xy.token_logprobs, std::vector<double>{-1.0});
  EXPECT_EQ(s.yx.token_logprobs, std::vector<double>{-2.0});
  EXPECT_EQ(s.xy.src_lang, "en");
  EXPECT_EQ(s.xy.tgt_lang, "de");
  EXPECT_EQ(s.yx.src_lang, "de");
  EXPECT_EQ(s.yx.tgt_lang, "en");
}

TEST(ScorerTest, SymmetricScores) {
  MapBackend backend;
  backend.scores["a"] = {-0.5};
  backend.scores["b"] = {-0.5};
  Scorer scorer(backend);
  const BidirectionalScores s = scorer.score_bidirectional(make_pair("p", "a", "b"));
  EXPECT_EQ(s.xy.token_logprobs, s.yx.token_logprobs);
  EXPECT_EQ(s.xy.src_lang, s.yx.tgt_lang);
  EXPECT_EQ(s.xy.tgt_lang, s.yx.src_lang);
}

TEST(ScorerTest, MissingDirectionInScoreFileIsNamed) {
  ScoreStore store;
  store.insert(ScoreRecord{"m", "en", "de", "a", "b", {-1.0}, std::nullopt},
               "test");
  StoreBackend backend(std::move(store));
  Scorer scorer(backend);
  try {
    scorer.score_bidirectional(make_pair("p", "a", "b"));
    FAIL() << "expected ScorerUnavailable";
  } catch (const ScorerUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("de->en"), std::string::npos)
        << e.what();
    EXPECT_EQ(pair_id_of_request(e.request_id()), "p");
  }
}

TEST(ScorerTest, BatchesRespectBatchSizeAndDeduplicate) {
  MapBackend backend;
  std::vector<SegmentPair> pairs;
  for (int i = 0; i < 50; ++i) {
    const std::string x = "x" + std::to_string(i % 25);  // 25 distinct pairs
    const std::string y = "y" + std::to_string(i % 25);
    backend.scores[x] = {-1.0};
    backend.scores[y] = {-2.0};
    pairs.push_back(make_pair("p" + std::to_string(i), x, y));
  }
  Scorer scorer(backend, nullptr, 8);
  const auto out = scorer.score_pairs(pairs);
  ASSERT_EQ(out.size(), 50u);
  EXPECT_EQ(backend.requests_served(), 50u);  // 25 pairs x 2 directions
  EXPECT_EQ(backend.max_batch, 8u);
  EXPECT_EQ(backend.batches, 7u);  // ceil(50 / 8)
  for (const auto& s : out) {
    EXPECT_EQ(s.xy.token_logprobs, std::vector<double>{-2.0});
    EXPECT_EQ(s.yx.token_logprobs, std::vector<double>{-1.0});
  }
}

TEST(ScorerTest, DiskCacheMakesRerunsBackendFree) {
  TempDir dir;
  ScoreCache cache(dir.path());
  MapBackend first;
  first.scores["a"] = {-1.25};
  first.scores["b"] = {-0.75, -0.5};
  {
    Scorer scorer(first, &cache);
    scorer.score_bidirectional(make_pair("p", "a", "b"));
  }
  EXPECT_EQ(cache.keys().size(), 2u);

  MapBackend second;  // knows nothing
  Scorer scorer(second, &cache);
  const BidirectionalScores s = scorer.score_bidirectional(make_pair("p", "a", "b"));
  EXPECT_EQ(second.requests_served(), 0u);
  EXPECT_EQ(scorer.disk_hits(), 2u);
  EXPECT_EQ(s.xy.token_logprobs, (std::vector<double>{-0.75, -0.5}));
  EXPECT_EQ(s.yx.token_logprobs, std::vector<double>{-1.25});
}

TEST(ScorerTest, NfcVariantsShareCacheEntries) {
  MapBackend backend;
  backend.scores["Caf\xC3\xA9"] = {-1.0};
  Scorer scorer(backend);
  scorer.score_pair({"q1", "en", "fr", "Coffee", "Caf\xC3\xA9"});
  scorer.score_pair({"q2", "en", "fr", "Coffee", "Cafe\xCC\x81"});
  EXPECT_EQ(backend.requests_served(), 1u);
}

TEST(ScorerTest, ValidationOfRequestsAndBatchSize) {
  MapBackend backend;
  EXPECT_THROW(Scorer(backend, nullptr, 0), InvalidArgument);
  Scorer scorer(backend);
  EXPECT_THROW(scorer.score_pair({"", "en", "de", "a", "b"}), InvalidArgument);
  EXPECT_THROW(scorer.score_pair({"q", "en", "de", "  ", "b"}), InvalidArgument);
}

TEST(ScorerTest, RequestIds) {
  const SegmentPair p = make_pair("doc-7", "a", "b");
  EXPECT_EQ(forward_request(p).id, "doc-7/xy");
  EXPECT_EQ(backward_request(p).id, "doc-7/yx");
  EXPECT_EQ(backward_request(p).source, "b");
  EXPECT_EQ(backward_request(p).src_lang, "de");
  EXPECT_EQ(pair_id_of_request("doc-7/yx"), "doc-7");
  EXPECT_EQ(pair_id_of_request("plain"), "plain");
}

TEST(ScorerTest, WorksOverTheSubprocessProtocol) {
  TempDir dir;
  ScoreCache cache(dir.path());
  SubprocessBackend backend(
      testing::fake_scorer_cmd(testing::fixture("detect4.scores.jsonl").string(),
                               "--mode reverse"));
  Scorer scorer(backend, &cache, 3);
  SegmentPair p = make_pair("a-1", "Der Hund schläft.", "The dog is asleep.");
  p.lang_x = "de";
  p.lang_y = "en";
  const BidirectionalScores s = scorer.score_bidirectional(p);
  EXPECT_EQ(s.xy.size(), 2u);
  EXPECT_EQ(s.yx.size(), 1u);
  EXPECT_EQ(cache.keys().size(), 2u);
}

}  // namespace
}  // namespace transdir
