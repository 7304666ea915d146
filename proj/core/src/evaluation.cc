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

#include "transdir/evaluation.h"

#include <tuple>
#include <utility>

#include "transdir/error.h"

namespace transdir {

namespace {

using RowKey = std::tuple<std::string, std::string, TranslationType, std::string>;
using GroupKey = std::pair<TranslationType, std::string>;

// Keeps insertion order while allowing lookup by key.
template <typename Key, typename Value>
class OrderedGroups {
 public:
  Value& operator[](const Key& key) {
    auto [it, inserted] = index_.try_emplace(key, values_.size());
    if (inserted) values_.emplace_back(key, Value{});
    return values_[it->second].second;
  }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  bool empty() const { return values_.empty(); }

 private:
  std::map<Key, std::size_t> index_;
  std::vector<std::pair<Key, Value>> values_;
};

DirectionVerdict flipped(DirectionVerdict v) {
  v.predicted = reversed(v.predicted);
  v.log_margin = -v.log_margin;
  v.prob_ratio = 1.0 / v.prob_ratio;
  return v;
}

}  // namespace

EvaluationReport build_evaluation_report(std::span<const EvaluationItem> items,
                                         const EvaluationOptions& options) {
  EvaluationReport report;
  report.level = options.level;
  report.bucket_width = options.bucket_width;

  // Orientation of each unordered language pair: first appearance wins.
  std::map<std::pair<std::string, std::string>, bool> orientation;
  auto oriented = [&](const EvaluationItem& item) {
    auto fwd = std::make_pair(item.lang_x, item.lang_y);
    auto bwd = std::make_pair(item.lang_y, item.lang_x);
    if (orientation.count(bwd)) return false;
    orientation.emplace(fwd, true);
    return true;
  };

  OrderedGroups<RowKey, std::vector<LabeledVerdict>> labeled;
  OrderedGroups<RowKey, std::vector<LengthItem>> lengths;
  OrderedGroups<RowKey, std::vector<DirectionVerdict>> indirect;

  for (const EvaluationItem& item : items) {
    const bool same = oriented(item);
    const std::string& a = same ? item.lang_x : item.lang_y;
    const std::string& b = same ? item.lang_y : item.lang_x;
    const RowKey key{a, b, item.type, item.dataset_tag};
    const DirectionVerdict v = same ? item.verdict : flipped(item.verdict);
    const Direction gold = same ? item.gold : reversed(item.gold);
    switch (item.gold) {
      case Direction::kX2Y:
      case Direction::kY2X:
        labeled[key].push_back(LabeledVerdict{v, gold});
        lengths[key].push_back(LengthItem{item.source_chars, v, gold});
        break;
      case Direction::kNone:
        indirect[key].push_back(v);
        break;
      case Direction::kUnknown:
        ++report.unlabeled;
        break;
    }
  }
  if (labeled.empty() && indirect.empty()) {
    throw EmptyInput("no items with a gold direction (x2y, y2x or none)");
  }

  OrderedGroups<GroupKey, std::vector<const AccuracyRow*>> groups;
  report.rows.reserve(std::distance(labeled.begin(), labeled.end()));
  for (const auto& [key, verdicts] : labeled) {
    const auto& [a, b, type, tag] = key;
    AccuracyRow row{a, b, type, tag, {}, 0.0, 0.0};
    try {
      row.accuracy = accuracy_by_direction(verdicts);
    } catch (const NoItemsForDirection& e) {
      throw NoItemsForDirection(a + "-" + b + " " +
                                std::string(to_string(type)) +
                                (tag.empty() ? "" : " [" + tag + "]") + ": " +
                                e.what());
    }
    row.avg = (row.accuracy.acc_xy + row.accuracy.acc_yx) / 2.0;
    row.bias = directional_bias(row.accuracy.acc_xy, row.accuracy.acc_yx);
    report.rows.push_back(std::move(row));
  }
  for (const AccuracyRow& row : report.rows) {
    groups[GroupKey{row.type, row.dataset_tag}].push_back(&row);
  }
  for (const auto& [key, rows] : groups) {
    if (rows.size() < 2) continue;
    MacroRow m{key.first, key.second, rows.size(), 0.0, 0.0, 0.0, 0.0};
    for (const AccuracyRow* r : rows) {
      m.acc_xy += r->accuracy.acc_xy;
      m.acc_yx += r->accuracy.acc_yx;
      m.avg += r->avg;
      m.bias += r->bias;
    }
    const double n = static_cast<double>(rows.size());
    m.acc_xy /= n;
    m.acc_yx /= n;
    m.avg /= n;
    m.bias /= n;
    report.macro_rows.push_back(m);
  }

  for (const auto& [key, verdicts] : indirect) {
    const auto& [a, b, type, tag] = key;
    report.ratio_rows.push_back(
        RatioRow{a, b, type, tag, prediction_ratio(verdicts), verdicts.size()});
  }

  if (options.bucket_width > 0) {
    OrderedGroups<GroupKey, std::vector<const BucketRow*>> bucket_groups;
    for (const auto& [key, items_in_row] : lengths) {
      const auto& [a, b, type, tag] = key;
      report.bucket_rows.push_back(BucketRow{
          a, b, type, tag,
          length_bucket_accuracy(items_in_row, options.bucket_width)});
    }
    for (const BucketRow& row : report.bucket_rows) {
      bucket_groups[GroupKey{row.type, row.dataset_tag}].push_back(&row);
    }
    for (const auto& [key, rows] : bucket_groups) {
      if (rows.size() < 2) continue;
      std::map<std::size_t, std::pair<double, std::size_t>> acc;
      for (const BucketRow* r : rows) {
        for (const auto& [bucket, b] : r->buckets) {
          acc[bucket].first += b.accuracy;
          ++acc[bucket].second;
        }
      }
      BucketMacroRow m{key.first, key.second, {}};
      for (const auto& [bucket, sum_n] : acc) {
        m.accuracy[bucket] = sum_n.first / static_cast<double>(sum_n.second);
      }
      report.bucket_macro_rows.push_back(std::move(m));
    }
  }
  return report;
}

}  // namespace transdir
