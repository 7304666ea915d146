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

#ifndef TRANSDIR_CACHE_KEY_H_
#define TRANSDIR_CACHE_KEY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace transdir {

// SHA-256 over the canonical byte sequence
//   scorer_id 0x1F src_lang 0x1F tgt_lang 0x1F source 0x1F target
// where every field has passed through canonicalize_text(). The source and
// target positions make the conditioning direction part of the identity.
// A field containing 0x1F is rejected (InvalidArgument), which keeps the
// join unambiguous.
struct CacheKey {
  std::array<std::uint8_t, 32> digest{};

  std::string hex() const;  // 64 lowercase hex digits
  static std::optional<CacheKey> from_hex(std::string_view hex);

  friend bool operator==(const CacheKey&, const CacheKey&) = default;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

CacheKey make_cache_key(std::string_view scorer_id, std::string_view src_lang,
                        std::string_view tgt_lang, std::string_view source,
                        std::string_view target);

// The exact bytes that are hashed; exposed for tests and debugging.
std::string cache_key_preimage(std::string_view scorer_id,
                               std::string_view src_lang,
                               std::string_view tgt_lang,
                               std::string_view source,
                               std::string_view target);

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& key) const noexcept {
    std::size_t h;
    std::memcpy(&h, key.digest.data(), sizeof(h));
    return h;
  }
};

}  // namespace transdir

#endif  // TRANSDIR_CACHE_KEY_H_
