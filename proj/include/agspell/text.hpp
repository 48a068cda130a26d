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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agspell {

// All engine-level text is a sequence of code points so that multi-byte
// characters count as single symbols in every distance computation.
using Str = std::u32string;
using StrView = std::u32string_view;

class Utf8Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Str to_u32(std::string_view utf8);
std::string to_utf8(StrView text);
std::string to_utf8(char32_t c);

}  // namespace agspell
