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

#include "transdir/cache_key.h"

#include <openssl/evp.h>

#include "transdir/error.h"
#include "transdir/text.h"

namespace transdir {

namespace {

constexpr char kSeparator = '\x1F';
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

// A field holding the separator would make the join ambiguous.
std::string canonical_field(std::string_view field) {
  std::string out = canonicalize_text(field);
  if (out.find(kSeparator) != std::string::npos) {
    throw InvalidArgument("cache key field contains the 0x1F separator");
  }
  return out;
}

}  // namespace

std::string CacheKey::hex() const {
  std::string out;
  out.reserve(digest.size() * 2);
  for (std::uint8_t b : digest) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xF]);
  }
  return out;
}

std::optional<CacheKey> CacheKey::from_hex(std::string_view hex) {
  CacheKey key;
  if (hex.size() != key.digest.size() * 2) return std::nullopt;
  for (std::size_t i = 0; i < key.digest.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    key.digest[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return key;
}

std::string cache_key_preimage(std::string_view scorer_id,
                               std::string_view src_lang,
                               std::string_view tgt_lang,
                               std::string_view source,
                               std::string_view target) {
  std::string bytes = canonical_field(scorer_id);
  for (std::string_view field : {src_lang, tgt_lang, source, target}) {
    bytes.push_back(kSeparator);
    bytes += canonical_field(field);
  }
  return bytes;
}

CacheKey make_cache_key(std::string_view scorer_id, std::string_view src_lang,
                        std::string_view tgt_lang, std::string_view source,
                        std::string_view target) {
  const std::string bytes =
      cache_key_preimage(scorer_id, src_lang, tgt_lang, source, target);
  CacheKey key;
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), key.digest.data(), &len,
                 EVP_sha256(), nullptr) != 1 ||
      len != key.digest.size()) {
    throw Error("SHA-256 digest failed");
  }
  return key;
}

}  // namespace transdir
