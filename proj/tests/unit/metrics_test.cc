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

#include "transdir/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "transdir/error.h"

namespace transdir {
namespace {

DirectionVerdict predict(Direction d) {
  return verdict_from_averages(d == Direction::kX2Y ? -1.0 : -2.0, -1.5);
}

LabeledVerdict item(Direction predicted, Direction gold) {
  return LabeledVerdict{predict(predicted), gold};
}

TEST(AccuracyTest, DirectCount) {
  std::vector<LabeledVerdict> items;
  for (int i = 0; i < 4; ++i) items.push_back(item(Direction::kX2Y, Direction::kX2Y));
  for (int i = 0; i < 2; ++i) items.push_back(item(Direction::kY2X, Direction::kY2X));
  for (int i = 0; i < 2; ++i) items.push_back(item(Direction::kX2Y, Direction::kY2X));
  const DirectionAccuracy a = accuracy_by_direction(items);
  EXPECT_EQ(a.acc_xy, 1.0);
  EXPECT_EQ(a.acc_yx, 0.5);
  EXPECT_EQ(a.n_xy, 4u);
  EXPECT_EQ(a.n_yx, 4u);
}

TEST(AccuracyTest, AlwaysX2YIsFullyBiased) {
  std::vector<LabeledVerdict> items;
  for (int i = 0; i < 5; ++i) {
    items.push_back(item(Direction::kX2Y, i % 2 ? Direction::kX2Y : Direction::kY2X));
  }
  const DirectionAccuracy a = accuracy_by_direction(items);
  EXPECT_EQ(a.acc_xy, 1.0);
  EXPECT_EQ(a.acc_yx, 0.0);
  EXPECT_EQ(directional_bias(a.acc_xy, a.acc_yx), 1.0);
}

// Independent tally over random verdicts; order must not matter.
TEST(AccuracyTest, MatchesHandTallyAndIgnoresOrder) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 50; ++round) {
    std::vector<LabeledVerdict> items;
    int n[2] = {0, 0}, ok[2] = {0, 0};
    for (int i = 0; i < 10 || n[0] == 0 || n[1] == 0; ++i) {
      const bool gold_xy = rng() & 1;
      const bool pred_xy = rng() & 1;
      items.push_back(item(pred_xy ? Direction::kX2Y : Direction::kY2X,
                           gold_xy ? Direction::kX2Y : Direction::kY2X));
      ++n[gold_xy ? 0 : 1];
      if (gold_xy == pred_xy) ++ok[gold_xy ? 0 : 1];
    }
    const DirectionAccuracy a = accuracy_by_direction(items);
    EXPECT_EQ(a.acc_xy, static_cast<double>(ok[0]) / n[0]);
    EXPECT_EQ(a.acc_yx, static_cast<double>(ok[1]) / n[1]);
    std::shuffle(items.begin(), items.end(), rng);
    const DirectionAccuracy b = accuracy_by_direction(items);
    EXPECT_EQ(a.acc_xy, b.acc_xy);
    EXPECT_EQ(a.acc_yx, b.acc_yx);
  }
}

TEST(AccuracyTest, TiesCountAsY2XAndAreReported) {
  const DirectionVerdict tie = verdict_from_averages(-1.0, -1.0);
  const std::vector<LabeledVerdict> items = {{tie, Direction::kY2X},
                                             {tie, Direction::kX2Y}};
  const DirectionAccuracy a = accuracy_by_direction(items);
  EXPECT_EQ(a.acc_yx, 1.0);
  EXPECT_EQ(a.acc_xy, 0.0);
  EXPECT_EQ(a.ties_xy, 1u);
  EXPECT_EQ(a.ties_yx, 1u);
}

TEST(AccuracyTest, Errors) {
  const std::vector<LabeledVerdict> one_sided = {item(Direction::kX2Y, Direction::kX2Y)};
  EXPECT_THROW(accuracy_by_direction(one_sided), NoItemsForDirection);
  const std::vector<LabeledVerdict> none = {item(Direction::kX2Y, Direction::kNone)};
  EXPECT_THROW(accuracy_by_direction(none), InvalidArgument);
}

// de-fr row of the reference HT table: 89.72 / 50.50, B reported as 0.39.
TEST(BiasTest, ReferenceValue) {
  const double b = directional_bias(0.8972, 0.5050);
  EXPECT_EQ(b, 0.3922);
  EXPECT_EQ(std::round(b * 100.0) / 100.0, 0.39);
}

TEST(BiasTest, BoundsAndEquality) {
  EXPECT_EQ(directional_bias(1.0, 0.0), 1.0);
  EXPECT_EQ(directional_bias(0.0, 1.0), 1.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), c = u(rng);
    const double b = directional_bias(a, c);
    EXPECT_GE(b, 0.0);
    EXPECT_LE(b, 1.0);
    EXPECT_EQ(b == 0.0, a == c);
    EXPECT_EQ(directional_bias(a, a), 0.0);
  }
  EXPECT_THROW(directional_bias(1.1, 0.5), InvalidArgument);
  EXPECT_THROW(directional_bias(0.5, -0.1), InvalidArgument);
  EXPECT_THROW(directional_bias(NAN, 0.5), InvalidArgument);
}

TEST(PredictionRatioTest, Examples) {
  std::vector<DirectionVerdict> all_xy(5, predict(Direction::kX2Y));
  const PredictionRatio r = prediction_ratio(all_xy);
  EXPECT_EQ(r.ratio_xy, 1.0);
  EXPECT_EQ(r.ratio_yx, 0.0);

  std::vector<DirectionVerdict> mixed;
  for (int i = 0; i < 8; ++i) {
    mixed.push_back(predict(i < 3 ? Direction::kX2Y : Direction::kY2X));
  }
  const PredictionRatio m = prediction_ratio(mixed);
  EXPECT_EQ(m.ratio_xy, 0.375);
  EXPECT_EQ(m.ratio_yx, 0.625);
  EXPECT_EQ(m.n_xy, 3u);
  EXPECT_EQ(m.n_yx, 5u);
  EXPECT_THROW(prediction_ratio(std::vector<DirectionVerdict>{}), EmptyInput);
}

TEST(LengthBucketTest, HalfOpenBuckets) {
  const DirectionVerdict right = predict(Direction::kX2Y);
  const DirectionVerdict wrong = predict(Direction::kY2X);
  const std::vector<LengthItem> items = {{5, right, Direction::kX2Y},
                                         {25, right, Direction::kX2Y},
                                         {20, wrong, Direction::kX2Y},
                                         {19, right, Direction::kY2X}};
  const auto b = length_bucket_accuracy(items, 20);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.at(0).total, 2u);
  EXPECT_EQ(b.at(0).correct, 1u);
  EXPECT_EQ(b.at(0).accuracy, 0.5);
  EXPECT_EQ(b.at(1).total, 2u);
  EXPECT_EQ(b.at(1).correct, 1u);
  EXPECT_THROW(length_bucket_accuracy(items, 0), InvalidArgument);
}

TEST(LengthBucketTest, DefaultWidthIsTwenty) {
  const std::vector<LengthItem> items = {{20, predict(Direction::kX2Y), Direction::kX2Y}};
  EXPECT_EQ(length_bucket_accuracy(items).count(1), 1u);
}

}  // namespace
}  // namespace transdir
