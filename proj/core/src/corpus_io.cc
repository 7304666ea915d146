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

#include "transdir/corpus_io.h"

#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "transdir/error.h"
#include "transdir/text.h"

namespace transdir {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string required(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_string()) {
    throw InvalidArgument(std::string("missing or non-string field \"") +
                          name + "\"");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw InvalidArgument(std::string("non-string field \"") + name + "\"");
  }
  return it->get<std::string>();
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::string encode_corpus_record(const SegmentPair& p) {
  ordered_json obj;
  obj["pair_id"] = p.pair_id;
  obj["doc_id"] = p.doc_id;
  obj["lang_x"] = p.lang_x;
  obj["lang_y"] = p.lang_y;
  obj["text_x"] = p.text_x;
  obj["text_y"] = p.text_y;
  obj["gold_direction"] = std::string(to_string(p.gold_direction));
  obj["translation_type"] = std::string(to_string(p.translation_type));
  if (p.system_id) obj["system_id"] = *p.system_id;
  if (p.dataset_tag) obj["dataset_tag"] = *p.dataset_tag;
  try {
    return obj.dump();
  } catch (const json::exception& e) {
    throw InvalidArgument("pair '" + p.pair_id + "': " + e.what());
  }
}

SegmentPair decode_corpus_record(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw InvalidArgument("record is not a JSON object");
  SegmentPair p;
  p.pair_id = required(obj, "pair_id");
  p.doc_id = required(obj, "doc_id");
  p.lang_x = required(obj, "lang_x");
  p.lang_y = required(obj, "lang_y");
  p.text_x = required(obj, "text_x");
  p.text_y = required(obj, "text_y");
  p.gold_direction = parse_direction(required(obj, "gold_direction"));
  p.translation_type = parse_translation_type(required(obj, "translation_type"));
  p.system_id = optional_field(obj, "system_id");
  p.dataset_tag = optional_field(obj, "dataset_tag");
  validate(p);
  return p;
}

Corpus read_corpus(std::istream& in, const std::string& name) {
  std::vector<SegmentPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      pairs.push_back(decode_corpus_record(line));
    } catch (const InvalidArgument& e) {
      throw ParseError(name, line_no, e.what());
    }
  }
  return assemble_corpus(std::move(pairs));
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open corpus " + path.string());
  return read_corpus(in, path.string());
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Document& d : corpus.documents) {
    for (const SegmentPair& p : d.pairs) out << encode_corpus_record(p) << '\n';
  }
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  write_corpus(corpus, out);
  if (!out) throw InvalidArgument("error writing " + path.string());
}

Corpus import_aligned_files(const std::filesystem::path& x_path,
                            const std::filesystem::path& y_path,
                            const AlignedImportOptions& options) {
  const std::vector<std::string> xs = read_lines(x_path);
  const std::vector<std::string> ys = read_lines(y_path);
  if (xs.size() != ys.size()) throw LineCountMismatch(xs.size(), ys.size());
  std::vector<std::string> doc_ids;
  if (options.boundaries) {
    doc_ids = read_lines(*options.boundaries);
    if (doc_ids.size() != xs.size()) {
      throw LineCountMismatch(xs.size(), doc_ids.size());
    }
  }

  std::vector<SegmentPair> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool x_empty = is_blank(xs[i]);
    const bool y_empty = is_blank(ys[i]);
    if (x_empty && y_empty) continue;
    if (x_empty != y_empty) throw OneSidedEmptyLine(i + 1);
    SegmentPair p;
    p.doc_id = options.boundaries ? doc_ids[i] : options.doc_id;
    if (is_blank(p.doc_id)) {
      throw ParseError(options.boundaries->string(), i + 1, "empty doc id");
    }
    p.pair_id = p.doc_id + "-" + std::to_string(i + 1);
    p.text_x = xs[i];
    p.text_y = ys[i];
    p.lang_x = options.lang_x;
    p.lang_y = options.lang_y;
    p.gold_direction = options.gold;
    p.translation_type = options.type;
    p.system_id = options.system_id;
    p.dataset_tag = options.dataset_tag;
    pairs.push_back(std::move(p));
  }
  return assemble_corpus(std::move(pairs), {{"x_path", x_path.string()},
                                            {"y_path", y_path.string()}});
}

}  // namespace transdir
