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

#ifndef CSPQ_UNICODE_HPP_INCLUDED
#define CSPQ_UNICODE_HPP_INCLUDED

#include <string>
#include <string_view>

namespace cspq {

/// Decodes UTF-8 bytes into a sequence of Unicode scalar values.
/// Rejects overlong encodings, surrogates, truncated sequences and
/// code points above U+10FFFF with an EncodingError.
std::u32string decode_utf8(std::string_view bytes);

/// Encodes Unicode scalar values back to UTF-8.
std::string encode_utf8(std::u32string_view text);

/// Encodes a single Unicode scalar value to UTF-8.
std::string encode_utf8(char32_t code_point);

}  // namespace cspq

#endif  // CSPQ_UNICODE_HPP_INCLUDED
