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

#include "transdir/score_record.h"

#include <charconv>
#include <regex>
#include <system_error>

#include <nlohmann/json.hpp>

#include "transdir/error.h"

namespace transdir {

namespace {

using nlohmann::json;

std::string json_string(const std::string& s) {
  try {
    return json(s).dump();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("cannot encode string: ") + e.what());
  }
}

std::string string_field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_string()) {
    throw InvalidArgument(std::string("missing or non-string field \"") +
                          name + "\"");
  }
  return it->get<std::string>();
}

}  // namespace

CacheKey ScoreRecord::key() const {
  return make_cache_key(scorer_id, src_lang, tgt_lang, source, target);
}

TokenScores ScoreRecord::to_token_scores() const {
  return TokenScores{token_logprobs, tokens, scorer_id, src_lang, tgt_lang};
}

ScoreRecord make_score_record(const ScoreRequest& request,
                              const TokenScores& scores) {
  return ScoreRecord{scores.scorer_id,     request.src_lang, request.tgt_lang,
                     request.source,       request.target,
                     scores.token_logprobs, scores.tokens};
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw Error("to_chars failed");
  std::string out(buf, end);
  // "-0" would read back as the integer 0 and lose its sign.
  if (out == "-0") out = "-0.0";
  return out;
}

std::string encode_record(const ScoreRecord& r) {
  std::string out = "{\"scorer_id\":" + json_string(r.scorer_id) +
                    ",\"src_lang\":" + json_string(r.src_lang) +
                    ",\"tgt_lang\":" + json_string(r.tgt_lang) +
                    ",\"source\":" + json_string(r.source) +
                    ",\"target\":" + json_string(r.target) + ",\"token_logprobs\":[";
  for (std::size_t i = 0; i < r.token_logprobs.size(); ++i) {
    if (i) out.push_back(',');
    out += format_double(r.token_logprobs[i]);
  }
  out.push_back(']');
  if (r.tokens) {
    out += ",\"tokens\":[";
    for (std::size_t i = 0; i < r.tokens->size(); ++i) {
      if (i) out.push_back(',');
      out += json_string((*r.tokens)[i]);
    }
    out.push_back(']');
  }
  out.push_back('}');
  return out;
}

bool has_non_finite_literal(std::string_view line) {
  static const std::regex kLiteral(R"([\[,:]\s*-?(Infinity|NaN|inf|nan)\b)");
  return std::regex_search(line.begin(), line.end(), kLiteral);
}

ScoreRecord decode_record(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    if (has_non_finite_literal(line)) {
      throw InvalidScores("non-finite logprob literal");
    }
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  } catch (const json::out_of_range&) {
    throw InvalidScores("logprob literal outside the double range");
  }
  if (!obj.is_object()) throw InvalidArgument("record is not a JSON object");

  ScoreRecord r;
  r.scorer_id = string_field(obj, "scorer_id");
  r.src_lang = string_field(obj, "src_lang");
  r.tgt_lang = string_field(obj, "tgt_lang");
  r.source = string_field(obj, "source");
  r.target = string_field(obj, "target");

  auto lp = obj.find("token_logprobs");
  if (lp == obj.end() || !lp->is_array()) {
    throw InvalidArgument("missing or non-array field \"token_logprobs\"");
  }
  r.token_logprobs.reserve(lp->size());
  for (const auto& v : *lp) {
    if (!v.is_number()) throw InvalidArgument("non-numeric logprob");
    r.token_logprobs.push_back(v.get<double>());
  }
  if (auto tk = obj.find("tokens"); tk != obj.end() && !tk->is_null()) {
    if (!tk->is_array()) throw InvalidArgument("\"tokens\" is not an array");
    std::vector<std::string> tokens;
    for (const auto& t : *tk) {
      if (!t.is_string()) throw InvalidArgument("non-string token");
      tokens.push_back(t.get<std::string>());
    }
    r.tokens = std::move(tokens);
  }
  validate(r.to_token_scores());
  return r;
}

}  // namespace transdir
