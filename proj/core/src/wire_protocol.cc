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

#include "transdir/wire_protocol.h"

#include <nlohmann/json.hpp>

#include "transdir/error.h"
#include "transdir/score_record.h"

namespace transdir {

namespace {

using nlohmann::json;

json parse_object(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    if (has_non_finite_literal(line)) {
      throw InvalidScores("non-finite logprob in scorer response");
    }
    throw ProtocolViolation("malformed line from scorer: " +
                            std::string(line.substr(0, 200)));
  } catch (const json::out_of_range&) {
    throw InvalidScores("logprob in scorer response outside the double range");
  }
  if (!obj.is_object()) {
    throw ProtocolViolation("scorer line is not a JSON object: " +
                            std::string(line.substr(0, 200)));
  }
  return obj;
}

std::string require_string(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_string()) {
    throw ProtocolViolation(std::string("missing or non-string \"") + name +
                            "\"");
  }
  return it->get<std::string>();
}

std::string json_string(std::string_view s) {
  try {
    return json(std::string(s)).dump();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("cannot encode string: ") + e.what());
  }
}

}  // namespace

std::string encode_hello_request() {
  return R"({"op":"hello","protocol":1})";
}

bool is_hello_request(std::string_view line) {
  try {
    const json obj = json::parse(line);
    return obj.is_object() && obj.value("op", "") == "hello";
  } catch (const json::exception&) {
    return false;
  }
}

std::string encode_hello_response(std::string_view scorer_id) {
  return R"({"op":"hello","protocol":1,"scorer_id":)" + json_string(scorer_id) +
         "}";
}

std::string decode_hello_response(std::string_view line) {
  const json obj = parse_object(line);
  if (obj.value("op", "") != "hello") {
    throw ProtocolViolation("expected hello response, got: " +
                            std::string(line.substr(0, 200)));
  }
  auto proto = obj.find("protocol");
  if (proto == obj.end() || !proto->is_number_integer() ||
      proto->get<int>() != kProtocolVersion) {
    throw ProtocolViolation("unsupported scorer protocol version");
  }
  std::string id = require_string(obj, "scorer_id");
  if (id.empty()) throw ProtocolViolation("empty scorer_id in hello");
  return id;
}

std::string encode_request(const ScoreRequest& r) {
  return "{\"id\":" + json_string(r.id) + ",\"src_lang\":" + json_string(r.src_lang) +
         ",\"tgt_lang\":" + json_string(r.tgt_lang) + ",\"source\":" +
         json_string(r.source) + ",\"target\":" + json_string(r.target) + "}";
}

ScoreRequest decode_request(std::string_view line) {
  const json obj = parse_object(line);
  return ScoreRequest{require_string(obj, "id"),
                      require_string(obj, "src_lang"),
                      require_string(obj, "tgt_lang"),
                      require_string(obj, "source"),
                      require_string(obj, "target")};
}

std::string encode_response(const ScoreResponse& r) {
  std::string out = "{\"id\":" + json_string(r.id);
  if (r.token_logprobs) {
    out += ",\"token_logprobs\":[";
    for (std::size_t i = 0; i < r.token_logprobs->size(); ++i) {
      if (i) out.push_back(',');
      out += format_double((*r.token_logprobs)[i]);
    }
    out.push_back(']');
  }
  if (r.tokens) {
    out += ",\"tokens\":[";
    for (std::size_t i = 0; i < r.tokens->size(); ++i) {
      if (i) out.push_back(',');
      out += json_string((*r.tokens)[i]);
    }
    out.push_back(']');
  }
  if (r.error) out += ",\"error\":" + json_string(*r.error);
  out.push_back('}');
  return out;
}

ScoreResponse decode_response(std::string_view line) {
  const json obj = parse_object(line);
  ScoreResponse r;
  r.id = require_string(obj, "id");

  const auto lp = obj.find("token_logprobs");
  const auto err = obj.find("error");
  const bool has_lp = lp != obj.end() && !lp->is_null();
  const bool has_err = err != obj.end() && !err->is_null();
  if (has_lp == has_err) {
    throw ProtocolViolation("response " + r.id +
                            " must carry exactly one of token_logprobs, error");
  }
  if (has_err) {
    if (!err->is_string()) throw ProtocolViolation("non-string error field");
    r.error = err->get<std::string>();
    return r;
  }
  if (!lp->is_array()) throw ProtocolViolation("token_logprobs is not an array");
  std::vector<double> logprobs;
  logprobs.reserve(lp->size());
  for (const auto& v : *lp) {
    if (!v.is_number()) throw ProtocolViolation("non-numeric logprob");
    logprobs.push_back(v.get<double>());
  }
  r.token_logprobs = std::move(logprobs);
  if (auto tk = obj.find("tokens"); tk != obj.end() && !tk->is_null()) {
    if (!tk->is_array()) throw ProtocolViolation("tokens is not an array");
    std::vector<std::string> tokens;
    for (const auto& t : *tk) {
      if (!t.is_string()) throw ProtocolViolation("non-string token");
      tokens.push_back(t.get<std::string>());
    }
    r.tokens = std::move(tokens);
  }
  return r;
}

}  // namespace transdir
