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

#ifndef TRANSDIR_CLI_REPORT_H_
#define TRANSDIR_CLI_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "transdir/corpus_stats.h"
#include "transdir/evaluation.h"

namespace transdir::cli {

enum class Format { kCsv, kJson, kMarkdown };

// Throws UnsupportedFormat.
Format parse_format(std::string_view name);

// Rectangular text table rendered as CSV or markdown.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& table);
std::string to_markdown(const Table& table);

// Tables separated by one blank line.
std::string render_tables(const std::vector<Table>& tables, Format format);

// printf-style helpers with fixed, locale-independent output.
std::string percent(double fraction);  // 0.8972 -> "89.72"
std::string fixed2(double value);      // 0.3922 -> "0.39"
std::string sig3(double value);        // 0.36788 -> "0.368"

// CSV and markdown: the accuracy table first (one line per language pair,
// then macro-average lines), followed by the indirect-pair table and the
// length-bucket table when present. Accuracies are percentages with two
// decimals; bias stays a fraction with two decimals. JSON keeps full
// precision. Output is a pure function of the report.
std::string emit_report(const EvaluationReport& report, Format format);
std::string emit_report(const EvaluationReport& report,
                        std::string_view format);

std::string emit_stats(const CorpusStats& stats, Format format);

}  // namespace transdir::cli

#endif  // TRANSDIR_CLI_REPORT_H_
