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

#include "transdir/error.h"

namespace transdir {

ParseError::ParseError(const std::string& where, std::size_t line,
                       const std::string& what)
    : InputError(where + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

ConflictingDuplicate::ConflictingDuplicate(const std::string& key_hex,
                                           const std::string& where)
    : InputError("conflicting duplicate record for key " + key_hex + " in " +
                 where),
      key_hex_(key_hex) {}

LineCountMismatch::LineCountMismatch(std::size_t x_lines, std::size_t y_lines)
    : InputError("line count mismatch: " + std::to_string(x_lines) + " vs " +
                 std::to_string(y_lines)),
      x_lines_(x_lines),
      y_lines_(y_lines) {}

OneSidedEmptyLine::OneSidedEmptyLine(std::size_t line)
    : InputError("line " + std::to_string(line) +
                 " is empty on one side only"),
      line_(line) {}

}  // namespace transdir
