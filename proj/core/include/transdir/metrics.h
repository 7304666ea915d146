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

#ifndef TRANSDIR_METRICS_H_
#define TRANSDIR_METRICS_H_

#include <cstddef>
#include <map>
#include <span>

#include "transdir/detection.h"
#include "transdir/types.h"

namespace transdir {

struct LabeledVerdict {
  DirectionVerdict verdict;
  Direction gold = Direction::kUnknown;
};

// Accuracy per gold direction. Ties are ordinary Y2X predictions; they are
// also counted separately for transparency.
struct DirectionAccuracy {
  double acc_xy = 0.0;
  double acc_yx = 0.0;
  std::size_t n_xy = 0;
  std::size_t n_yx = 0;
  std::size_t correct_xy = 0;
  std::size_t correct_yx = 0;
  std::size_t ties_xy = 0;
  std::size_t ties_yx = 0;
};

// Every gold must be X2Y or Y2X (InvalidArgument otherwise). Throws
// NoItemsForDirection if either direction has no items.
DirectionAccuracy accuracy_by_direction(std::span<const LabeledVerdict> items);

// B = |acc_xy - acc_yx|, from 0 (unbiased) to 1 (always predicts one side).
double directional_bias(double acc_xy, double acc_yx);

struct PredictionRatio {
  double ratio_xy = 0.0;
  double ratio_yx = 0.0;
  std::size_t n_xy = 0;
  std::size_t n_yx = 0;
  std::size_t ties = 0;
};

// Share of X2Y and Y2X predictions; meant for indirect pairs where neither
// side is original. Throws EmptyInput.
PredictionRatio prediction_ratio(std::span<const DirectionVerdict> verdicts);

struct LengthItem {
  std::size_t source_chars = 0;
  DirectionVerdict verdict;
  Direction gold = Direction::kUnknown;
};

struct BucketAccuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

inline constexpr std::size_t kDefaultBucketWidth = 20;

// Accuracy by source length, pooled over both gold directions. Bucket k holds
// lengths in [k*w, (k+1)*w). Empty buckets are absent from the result.
std::map<std::size_t, BucketAccuracy> length_bucket_accuracy(
    std::span<const LengthItem> items,
    std::size_t bucket_width = kDefaultBucketWidth);

}  // namespace transdir

#endif  // TRANSDIR_METRICS_H_
