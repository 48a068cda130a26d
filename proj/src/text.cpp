// Copyright 2026 The agspell authors
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

#include "agspell/text.hpp"

namespace agspell {

namespace {

[[noreturn]] void bad_byte(std::size_t offset) {
  throw Utf8Error("invalid UTF-8 sequence at byte offset " +
                  std::to_string(offset));
}

}  // namespace

Str to_u32(std::string_view utf8) {
  Str out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      bad_byte(i);
    }
    if (i + static_cast<std::size_t>(extra) >= utf8.size()) bad_byte(i);
    for (int k = 1; k <= extra; ++k) {
      const unsigned char b = static_cast<unsigned char>(utf8[i + k]);
      if ((b & 0xC0) != 0x80) bad_byte(i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLength[4] = {0, 0x80, 0x800, 0x10000};
    if (extra > 0 && cp < kMinForLength[extra]) bad_byte(i);  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) bad_byte(i);            // surrogate
    if (cp > 0x10FFFF) bad_byte(i);
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string to_utf8(StrView text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
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
  }
  return out;
}

std::string to_utf8(char32_t c) { return to_utf8(StrView(&c, 1)); }

}  // namespace agspell
