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

#ifndef TRANSDIR_EVALUATION_H_
#define TRANSDIR_EVALUATION_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "transdir/detection.h"
#include "transdir/metrics.h"
#include "transdir/types.h"

namespace transdir {

// One evaluated unit (a sentence pair or a whole document).
struct EvaluationItem {
  std::string lang_x;
  std::string lang_y;
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  Direction gold = Direction::kUnknown;
  DirectionVerdict verdict;
  std::size_t source_chars = 0;
};

// Rows are keyed by (language pair, translation type, dataset tag). The
// orientation (lang_a, lang_b) of a language pair is the one it first
// appears with; "fwd" means gold lang_a -> lang_b.
struct AccuracyRow {
  std::string lang_a;
  std::string lang_b;
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  DirectionAccuracy accuracy;
  double avg = 0.0;   // (acc_fwd + acc_bwd) / 2
  double bias = 0.0;  // |acc_fwd - acc_bwd|
};

// Unweighted mean over the rows of one (type, tag) group.
struct MacroRow {
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  std::size_t n_rows = 0;
  double acc_xy = 0.0;
  double acc_yx = 0.0;
  double avg = 0.0;
  double bias = 0.0;
};

// Prediction shares for indirect (gold NONE) items.
struct RatioRow {
  std::string lang_a;
  std::string lang_b;
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  PredictionRatio ratio;
  std::size_t n = 0;
};

struct BucketRow {
  std::string lang_a;
  std::string lang_b;
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  std::map<std::size_t, BucketAccuracy> buckets;
};

struct BucketMacroRow {
  TranslationType type = TranslationType::kUnknown;
  std::string dataset_tag;
  std::map<std::size_t, double> accuracy;  // mean over rows with the bucket
};

struct EvaluationReport {
  std::string level = "sentence";
  std::vector<AccuracyRow> rows;
  std::vector<MacroRow> macro_rows;  // only for groups with >= 2 rows
  std::vector<RatioRow> ratio_rows;
  std::size_t bucket_width = 0;      // 0: no length breakdown
  std::vector<BucketRow> bucket_rows;
  std::vector<BucketMacroRow> bucket_macro_rows;
  std::size_t unlabeled = 0;         // items with gold UNKNOWN, skipped
};

struct EvaluationOptions {
  std::string level = "sentence";
  std::size_t bucket_width = 0;
};

// Throws EmptyInput when no item carries a usable gold label and
// NoItemsForDirection when a row has items for only one gold direction.
EvaluationReport build_evaluation_report(std::span<const EvaluationItem> items,
                                         const EvaluationOptions& options = {});

}  // namespace transdir

#endif  // TRANSDIR_EVALUATION_H_
