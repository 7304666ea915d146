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

#include "transdir/types.h"

#include "transdir/error.h"

namespace transdir {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kX2Y: return "x2y";
    case Direction::kY2X: return "y2x";
    case Direction::kNone: return "none";
    case Direction::kUnknown: return "unknown";
  }
  return "unknown";
}

Direction parse_direction(std::string_view s) {
  if (s == "x2y") return Direction::kX2Y;
  if (s == "y2x") return Direction::kY2X;
  if (s == "none") return Direction::kNone;
  if (s == "unknown") return Direction::kUnknown;
  throw InvalidArgument("unknown gold_direction '" + std::string(s) +
                        "' (expected x2y|y2x|none|unknown)");
}

std::string_view to_string(TranslationType t) {
  switch (t) {
    case TranslationType::kHT: return "HT";
    case TranslationType::kNMT: return "NMT";
    case TranslationType::kPreNMT: return "pre-NMT";
    case TranslationType::kLLM: return "LLM";
    case TranslationType::kUnknown: return "unknown";
  }
  return "unknown";
}

TranslationType parse_translation_type(std::string_view s) {
  if (s == "HT") return TranslationType::kHT;
  if (s == "NMT") return TranslationType::kNMT;
  if (s == "pre-NMT") return TranslationType::kPreNMT;
  if (s == "LLM") return TranslationType::kLLM;
  if (s == "unknown") return TranslationType::kUnknown;
  throw InvalidArgument("unknown translation_type '" + std::string(s) +
                        "' (expected HT|NMT|pre-NMT|LLM|unknown)");
}

Direction reversed(Direction d) {
  switch (d) {
    case Direction::kX2Y: return Direction::kY2X;
    case Direction::kY2X: return Direction::kX2Y;
    default: return d;
  }
}

}  // namespace transdir
