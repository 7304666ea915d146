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

#include <cstdio>

#include <nlohmann/json.hpp>

#include "transdir/error.h"

namespace transdir::cli {

namespace {

using nlohmann::ordered_json;

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return a + "-" + b;
}

std::string bucket_label(std::size_t bucket, std::size_t width) {
  return std::to_string(bucket * width) + "-" +
         std::to_string((bucket + 1) * width - 1);
}

std::vector<Table> report_tables(const EvaluationReport& r) {
  std::vector<Table> tables;

  Table acc{{"level", "pair", "type", "dataset", "n_fwd", "n_bwd", "acc_fwd",
             "acc_bwd", "avg", "bias"},
            {}};
  for (const AccuracyRow& row : r.rows) {
    acc.rows.push_back({r.level, pair_label(row.lang_a, row.lang_b),
                        std::string(to_string(row.type)), row.dataset_tag,
                        std::to_string(row.accuracy.n_xy),
                        std::to_string(row.accuracy.n_yx),
                        percent(row.accuracy.acc_xy),
                        percent(row.accuracy.acc_yx), percent(row.avg),
                        fixed2(row.bias)});
  }
  for (const MacroRow& m : r.macro_rows) {
    acc.rows.push_back({r.level, "macro-avg", std::string(to_string(m.type)),
                        m.dataset_tag, "", "", percent(m.acc_xy),
                        percent(m.acc_yx), percent(m.avg), fixed2(m.bias)});
  }
  if (!acc.rows.empty()) tables.push_back(std::move(acc));

  if (!r.ratio_rows.empty()) {
    Table ind{{"level", "pair", "type", "dataset", "n", "pred_fwd",
               "pred_bwd", "ties"},
              {}};
    for (const RatioRow& row : r.ratio_rows) {
      ind.rows.push_back({r.level, pair_label(row.lang_a, row.lang_b),
                          std::string(to_string(row.type)), row.dataset_tag,
                          std::to_string(row.n), percent(row.ratio.ratio_xy),
                          percent(row.ratio.ratio_yx),
                          std::to_string(row.ratio.ties)});
    }
    tables.push_back(std::move(ind));
  }

  if (r.bucket_width > 0 && !r.bucket_rows.empty()) {
    Table len{{"level", "pair", "type", "dataset", "chars", "correct", "total",
               "acc"},
              {}};
    for (const BucketRow& row : r.bucket_rows) {
      for (const auto& [bucket, b] : row.buckets) {
        len.rows.push_back({r.level, pair_label(row.lang_a, row.lang_b),
                            std::string(to_string(row.type)), row.dataset_tag,
                            bucket_label(bucket, r.bucket_width),
                            std::to_string(b.correct),
                            std::to_string(b.total), percent(b.accuracy)});
      }
    }
    for (const BucketMacroRow& m : r.bucket_macro_rows) {
      for (const auto& [bucket, a] : m.accuracy) {
        len.rows.push_back({r.level, "macro-avg",
                            std::string(to_string(m.type)), m.dataset_tag,
                            bucket_label(bucket, r.bucket_width), "", "",
                            percent(a)});
      }
    }
    tables.push_back(std::move(len));
  }
  return tables;
}

ordered_json report_json(const EvaluationReport& r) {
  ordered_json j;
  j["level"] = r.level;
  j["rows"] = ordered_json::array();
  for (const AccuracyRow& row : r.rows) {
    const DirectionAccuracy& a = row.accuracy;
    j["rows"].push_back({{"pair", pair_label(row.lang_a, row.lang_b)},
                         {"lang_a", row.lang_a},
                         {"lang_b", row.lang_b},
                         {"type", to_string(row.type)},
                         {"dataset", row.dataset_tag},
                         {"n_fwd", a.n_xy},
                         {"n_bwd", a.n_yx},
                         {"correct_fwd", a.correct_xy},
                         {"correct_bwd", a.correct_yx},
                         {"ties_fwd", a.ties_xy},
                         {"ties_bwd", a.ties_yx},
                         {"acc_fwd", a.acc_xy},
                         {"acc_bwd", a.acc_yx},
                         {"avg", row.avg},
                         {"bias", row.bias}});
  }
  j["macro_rows"] = ordered_json::array();
  for (const MacroRow& m : r.macro_rows) {
    j["macro_rows"].push_back({{"type", to_string(m.type)},
                               {"dataset", m.dataset_tag},
                               {"n_rows", m.n_rows},
                               {"acc_fwd", m.acc_xy},
                               {"acc_bwd", m.acc_yx},
                               {"avg", m.avg},
                               {"bias", m.bias}});
  }
  j["indirect_rows"] = ordered_json::array();
  for (const RatioRow& row : r.ratio_rows) {
    j["indirect_rows"].push_back({{"pair", pair_label(row.lang_a, row.lang_b)},
                                  {"type", to_string(row.type)},
                                  {"dataset", row.dataset_tag},
                                  {"n", row.n},
                                  {"pred_fwd", row.ratio.ratio_xy},
                                  {"pred_bwd", row.ratio.ratio_yx},
                                  {"ties", row.ratio.ties}});
  }
  j["bucket_width"] = r.bucket_width;
  j["bucket_rows"] = ordered_json::array();
  for (const BucketRow& row : r.bucket_rows) {
    ordered_json buckets = ordered_json::array();
    for (const auto& [bucket, b] : row.buckets) {
      buckets.push_back({{"chars", bucket_label(bucket, r.bucket_width)},
                         {"correct", b.correct},
                         {"total", b.total},
                         {"acc", b.accuracy}});
    }
    j["bucket_rows"].push_back({{"pair", pair_label(row.lang_a, row.lang_b)},
                                {"type", to_string(row.type)},
                                {"dataset", row.dataset_tag},
                                {"buckets", buckets}});
  }
  j["bucket_macro_rows"] = ordered_json::array();
  for (const BucketMacroRow& m : r.bucket_macro_rows) {
    ordered_json buckets = ordered_json::array();
    for (const auto& [bucket, a] : m.accuracy) {
      buckets.push_back(
          {{"chars", bucket_label(bucket, r.bucket_width)}, {"acc", a}});
    }
    j["bucket_macro_rows"].push_back({{"type", to_string(m.type)},
                                      {"dataset", m.dataset_tag},
                                      {"buckets", buckets}});
  }
  j["unlabeled"] = r.unlabeled;
  return j;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "markdown" || name == "md") return Format::kMarkdown;
  throw UnsupportedFormat("unsupported format '" + std::string(name) +
                          "' (expected csv, json or markdown)");
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string to_markdown(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    out += '|';
    for (const std::string& c : cells) out += ' ' + md_cell(c) + " |";
    out += '\n';
  };
  line(table.header);
  out += '|';
  for (std::size_t i = 0; i < table.header.size(); ++i) out += " --- |";
  out += '\n';
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render_tables(const std::vector<Table>& tables, Format format) {
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out += '\n';
    out += format == Format::kMarkdown ? to_markdown(tables[i])
                                       : to_csv(tables[i]);
  }
  return out;
}

std::string percent(double fraction) {
  return printf_double("%.2f", fraction * 100.0);
}

std::string fixed2(double value) { return printf_double("%.2f", value); }

std::string sig3(double value) { return printf_double("%#.3g", value); }

std::string emit_report(const EvaluationReport& report, Format format) {
  if (format == Format::kJson) return report_json(report).dump(2) + "\n";
  return render_tables(report_tables(report), format);
}

std::string emit_report(const EvaluationReport& report,
                        std::string_view format) {
  return emit_report(report, parse_format(format));
}

std::string emit_stats(const CorpusStats& stats, Format format) {
  std::vector<TranslationType> types;
  for (TranslationType t :
       {TranslationType::kHT, TranslationType::kNMT, TranslationType::kPreNMT,
        TranslationType::kLLM, TranslationType::kUnknown}) {
    if (stats.total.target_sentences.count(t)) types.push_back(t);
  }
  auto target = [](const CorpusStatsRow& row, TranslationType t) {
    auto it = row.target_sentences.find(t);
    return it == row.target_sentences.end() ? std::size_t{0} : it->second;
  };

  if (format == Format::kJson) {
    ordered_json j;
    j["doc_threshold"] = stats.doc_threshold;
    auto row_json = [&](const CorpusStatsRow& row) {
      ordered_json targets = ordered_json::object();
      for (TranslationType t : types) targets[std::string(to_string(t))] = target(row, t);
      return ordered_json{{"direction", row.direction},
                          {"source_sentences", row.source_sentences},
                          {"documents", row.documents},
                          {"documents_at_threshold", row.documents_at_threshold},
                          {"segment_pairs", row.segment_pairs},
                          {"target_sentences", targets}};
    };
    j["rows"] = ordered_json::array();
    for (const CorpusStatsRow& row : stats.rows) j["rows"].push_back(row_json(row));
    j["total"] = row_json(stats.total);
    return j.dump(2) + "\n";
  }

  Table t{{"direction", "source_sentences", "documents",
           "docs_ge_" + std::to_string(stats.doc_threshold), "segment_pairs"},
          {}};
  for (TranslationType type : types) {
    t.header.push_back("tgt_" + std::string(to_string(type)));
  }
  auto add = [&](const CorpusStatsRow& row) {
    std::vector<std::string> cells{row.direction,
                                   std::to_string(row.source_sentences),
                                   std::to_string(row.documents),
                                   std::to_string(row.documents_at_threshold),
                                   std::to_string(row.segment_pairs)};
    for (TranslationType type : types) {
      cells.push_back(std::to_string(target(row, type)));
    }
    t.rows.push_back(std::move(cells));
  };
  for (const CorpusStatsRow& row : stats.rows) add(row);
  add(stats.total);
  return render_tables({t}, format);
}

}  // namespace transdir::cli
