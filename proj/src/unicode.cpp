// Copyright 2026 The cspq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cspq/unicode.hpp"

#include <cstdint>

#include "cspq/errors.hpp"

namespace cspq {

namespace {

[[noreturn]] void bad_utf8(std::size_t offset) {
  throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto b0 = static_cast<std::uint8_t>(bytes[i]);
    std::size_t len;
    std::uint32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07u;
    } else {
      bad_utf8(i);
    }
    if (i + len > bytes.size()) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = static_cast<std::uint8_t>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) bad_utf8(i + k);
      cp = (cp << 6) | (bk & 0x3Fu);
    }
    // Overlong encodings, surrogates and out-of-range values are invalid.
    static constexpr std::uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len]) bad_utf8(i);
    if (cp >= 0xD800 && cp <= 0xDFFF) bad_utf8(i);
    if (cp > 0x10FFFF) bad_utf8(i);
    out.push_back(static_cast<char32_t>(cp));
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t code_point) {
  const auto cp = static_cast<std::uint32_t>(code_point);
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += encode_utf8(cp);
  return out;
}

}  // namespace cspq
