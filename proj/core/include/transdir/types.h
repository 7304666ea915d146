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

#ifndef TRANSDIR_TYPES_H_
#define TRANSDIR_TYPES_H_

#include <string>
#include <string_view>

namespace transdir {

// Original translation direction of a pair (x, y). X2Y means x is the
// original and y its translation. NONE marks indirect pairs where both sides
// were translated from a third language.
enum class Direction { kX2Y, kY2X, kNone, kUnknown };

enum class TranslationType { kHT, kNMT, kPreNMT, kLLM, kUnknown };

// Wire names: "x2y", "y2x", "none", "unknown".
std::string_view to_string(Direction d);
Direction parse_direction(std::string_view s);  // throws InvalidArgument

// Wire names: "HT", "NMT", "pre-NMT", "LLM", "unknown".
std::string_view to_string(TranslationType t);
TranslationType parse_translation_type(std::string_view s);

// X2Y <-> Y2X; NONE and UNKNOWN map to themselves.
Direction reversed(Direction d);

}  // namespace transdir

#endif  // TRANSDIR_TYPES_H_
