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

#ifndef TRANSDIR_TEXT_H_
#define TRANSDIR_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace transdir {

bool is_valid_utf8(std::string_view s);

// Number of Unicode scalar values. Input must be valid UTF-8.
std::size_t utf8_scalar_count(std::string_view s);

// True if s is empty or consists only of ASCII whitespace.
bool is_blank(std::string_view s);

// Removes one trailing "\n" or "\r\n", if present.
std::string_view strip_trailing_newline(std::string_view s);

// Canonical form used for hashing: a single trailing newline is removed and
// the text is NFC-normalized. No case folding and no other whitespace
// changes. Throws InvalidArgument on ill-formed UTF-8.
std::string canonicalize_text(std::string_view s);

}  // namespace transdir

#endif  // TRANSDIR_TEXT_H_
