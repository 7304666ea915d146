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

#include <cmath>

#include "transdir/error.h"

namespace transdir {

namespace {

void require_gold(Direction gold) {
  if (gold != Direction::kX2Y && gold != Direction::kY2X) {
    throw InvalidArgument("gold direction must be x2y or y2x, got " +
                          std::string(to_string(gold)));
  }
}

}  // namespace

DirectionAccuracy accuracy_by_direction(std::span<const LabeledVerdict> items) {
  DirectionAccuracy a;
  for (const LabeledVerdict& item : items) {
    require_gold(item.gold);
    const bool correct = item.verdict.predicted == item.gold;
    if (item.gold == Direction::kX2Y) {
      ++a.n_xy;
      a.correct_xy += correct;
      a.ties_xy += item.verdict.tie;
    } else {
      ++a.n_yx;
      a.correct_yx += correct;
      a.ties_yx += item.verdict.tie;
    }
  }
  if (a.n_xy == 0 || a.n_yx == 0) {
    throw NoItemsForDirection(
        std::string("no items with gold direction ") +
        (a.n_xy == 0 ? "x2y" : "y2x") + " (" + std::to_string(a.n_xy) +
        " x2y, " + std::to_string(a.n_yx) + " y2x)");
  }
  a.acc_xy = static_cast<double>(a.correct_xy) / static_cast<double>(a.n_xy);
  a.acc_yx = static_cast<double>(a.correct_yx) / static_cast<double>(a.n_yx);
  return a;
}

double directional_bias(double acc_xy, double acc_yx) {
  if (!(acc_xy >= 0.0 && acc_xy <= 1.0 && acc_yx >= 0.0 && acc_yx <= 1.0)) {
    throw InvalidArgument("accuracies must lie in [0, 1]");
  }
  return std::fabs(acc_xy - acc_yx);
}

PredictionRatio prediction_ratio(std::span<const DirectionVerdict> verdicts) {
  if (verdicts.empty()) throw EmptyInput("no verdicts for prediction ratio");
  PredictionRatio r;
  for (const DirectionVerdict& v : verdicts) {
    if (v.predicted == Direction::kX2Y) {
      ++r.n_xy;
    } else {
      ++r.n_yx;
    }
    r.ties += v.tie;
  }
  const double n = static_cast<double>(verdicts.size());
  r.ratio_xy = static_cast<double>(r.n_xy) / n;
  r.ratio_yx = static_cast<double>(r.n_yx) / n;
  return r;
}

std::map<std::size_t, BucketAccuracy> length_bucket_accuracy(
    std::span<const LengthItem> items, std::size_t bucket_width) {
  if (bucket_width == 0) throw InvalidArgument("bucket width must be >= 1");
  std::map<std::size_t, BucketAccuracy> buckets;
  for (const LengthItem& item : items) {
    require_gold(item.gold);
    BucketAccuracy& b = buckets[item.source_chars / bucket_width];
    ++b.total;
    b.correct += item.verdict.predicted == item.gold;
  }
  for (auto& [index, b] : buckets) {
    b.accuracy = static_cast<double>(b.correct) / static_cast<double>(b.total);
  }
  return buckets;
}

}  // namespace transdir
