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

#include "transdir/cli/report.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <random>
#include <sstream>

#include "transdir/error.h"

namespace transdir::cli {
namespace {

EvaluationItem make(const std::string& x, const std::string& y, Direction gold,
                    bool predict_x2y) {
  EvaluationItem item;
  item.lang_x = x;
  item.lang_y = y;
  item.gold = gold;
  item.type = TranslationType::kHT;
  item.verdict = verdict_from_averages(predict_x2y ? -1.0 : -2.0, -1.5);
  item.source_chars = 30;
  return item;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

EvaluationReport one_row() {
  const std::vector<EvaluationItem> items = {
      make("de", "en", Direction::kX2Y, true), make("de", "en", Direction::kX2Y, false),
      make("de", "en", Direction::kY2X, false)};
  return build_evaluation_report(items);
}

TEST(ReportTest, OneRowCsv) {
  const auto l = lines(emit_report(one_row(), Format::kCsv));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "level,pair,type,dataset,n_fwd,n_bwd,acc_fwd,acc_bwd,avg,bias");
  EXPECT_EQ(l[1], "sentence,de-en,HT,,2,1,50.00,100.00,75.00,0.50");
}

TEST(ReportTest, Markdown) {
  const auto l = lines(emit_report(one_row(), "md"));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[1].substr(0, 7), "| --- |");
  EXPECT_EQ(l[2], "| sentence | de-en | HT |  | 2 | 1 | 50.00 | 100.00 | 75.00 | 0.50 |");
}

TEST(ReportTest, FormatHelpers) {
  EXPECT_EQ(percent(0.8972), "89.72");
  EXPECT_EQ(fixed2(0.3922), "0.39");
  EXPECT_EQ(sig3(0.36788), "0.368");
  EXPECT_EQ(sig3(2.0), "2.00");
  EXPECT_EQ(to_csv({{"a", "b"}, {{"x,y", "say \"hi\""}}}), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
  EXPECT_EQ(to_markdown({{"a"}, {{"p|q"}}}), "| a |\n| --- |\n| p\\|q |\n");
}

TEST(ReportTest, UnsupportedFormat) {
  EXPECT_THROW(parse_format("xml"), UnsupportedFormat);
  EXPECT_THROW(emit_report(one_row(), "tsv"), UnsupportedFormat);
  EXPECT_EQ(parse_format("markdown"), Format::kMarkdown);
}

// Random reports: JSON and CSV agree after rounding, Avg is the mean of the
// two accuracies, and emission is deterministic.
TEST(ReportTest, FormatsAgree) {
  std::mt19937_64 rng(4);
  const char* langs[][2] = {{"de", "en"}, {"fr", "de"}, {"cs", "uk"}};
  for (int round = 0; round < 40; ++round) {
    std::vector<EvaluationItem> items;
    for (const auto& lp : langs) {
      items.push_back(make(lp[0], lp[1], Direction::kX2Y, rng() & 1));
      items.push_back(make(lp[0], lp[1], Direction::kY2X, rng() & 1));
      for (int i = 0; i < 8; ++i) {
        items.push_back(make(lp[0], lp[1], rng() & 1 ? Direction::kX2Y : Direction::kY2X,
                             rng() & 1));
      }
    }
    items.push_back(make("it", "es", Direction::kNone, rng() & 1));
    const EvaluationReport r = build_evaluation_report(items, {"sentence", 10});
    const std::string csv = emit_report(r, Format::kCsv);
    EXPECT_EQ(csv, emit_report(r, Format::kCsv));
    const auto j = nlohmann::json::parse(emit_report(r, Format::kJson));
    const auto l = lines(csv);
    ASSERT_EQ(j["rows"].size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& row = j["rows"][i];
      std::vector<std::string> cells;
      std::stringstream ss(l[i + 1]);
      for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
      ASSERT_EQ(cells.size(), 10u);
      EXPECT_EQ(cells[6], percent(row["acc_fwd"].get<double>()));
      EXPECT_EQ(cells[7], percent(row["acc_bwd"].get<double>()));
      EXPECT_EQ(cells[9], fixed2(row["bias"].get<double>()));
      EXPECT_DOUBLE_EQ(row["avg"].get<double>(),
                       (row["acc_fwd"].get<double>() + row["acc_bwd"].get<double>()) / 2);
    }
    EXPECT_EQ(j["macro_rows"].size(), 1u);
    EXPECT_EQ(j["indirect_rows"].size(), 1u);
    EXPECT_EQ(j["bucket_width"], 10);
  }
}

TEST(ReportTest, StatsTable) {
  CorpusStats s;
  s.doc_threshold = 3;
  CorpusStatsRow row{"de->en", 4, 2, 1, 5, {{TranslationType::kHT, 5}}};
  s.rows.push_back(row);
  s.total = row;
  s.total.direction = "total";
  const auto l = lines(emit_stats(s, Format::kCsv));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "direction,source_sentences,documents,docs_ge_3,segment_pairs,tgt_HT");
  EXPECT_EQ(l[1], "de->en,4,2,1,5,5");
  EXPECT_EQ(l[2], "total,4,2,1,5,5");
}

}  // namespace
}  // namespace transdir::cli
