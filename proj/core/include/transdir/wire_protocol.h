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

#ifndef TRANSDIR_WIRE_PROTOCOL_H_
#define TRANSDIR_WIRE_PROTOCOL_H_

#include <string>
#include <string_view>

#include "transdir/token_scores.h"

namespace transdir {

// Newline-delimited JSON spoken with a scorer subprocess over stdin/stdout.
//
//   engine -> scorer  {"op":"hello","protocol":1}
//   scorer -> engine  {"op":"hello","protocol":1,"scorer_id":"..."}
//   engine -> scorer  {"id","src_lang","tgt_lang","source","target"}
//   scorer -> engine  {"id","token_logprobs":[...],"tokens"?:[...]}
//                  or {"id","error":"..."}
//
// Responses are matched to requests by id and may arrive in any order.
// All encoders return one line without the trailing newline.

inline constexpr int kProtocolVersion = 1;

std::string encode_hello_request();
bool is_hello_request(std::string_view line);
std::string encode_hello_response(std::string_view scorer_id);
// Returns the scorer_id. Throws ProtocolViolation.
std::string decode_hello_response(std::string_view line);

std::string encode_request(const ScoreRequest& request);
// Throws ProtocolViolation.
ScoreRequest decode_request(std::string_view line);

std::string encode_response(const ScoreResponse& response);
// Structural checks only (exactly one of token_logprobs / error). Throws
// ProtocolViolation, or InvalidScores for NaN / Infinity literals and
// numbers outside the double range.
ScoreResponse decode_response(std::string_view line);

}  // namespace transdir

#endif  // TRANSDIR_WIRE_PROTOCOL_H_
