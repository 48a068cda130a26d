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

#include <doctest.h>

#include <agspell/text.hpp>

using agspell::Str;
using agspell::to_u32;
using agspell::to_utf8;

TEST_SUITE("text") {

TEST_CASE("ascii round trip") {
  CHECK(to_u32("kalas") == U"kalas");
  CHECK(to_utf8(U"kalas") == "kalas");
  CHECK(to_u32("") == U"");
  CHECK(to_utf8(U"") == "");
}

TEST_CASE("multi-byte characters count as one symbol") {
  Str w = to_u32("çalışmalarıyla");
  CHECK(w.size() == 14);
  CHECK(w[0] == U'ç');
  CHECK(to_utf8(w) == "çalışmalarıyla");
}

TEST_CASE("three byte sequences survive") {
  Str w = to_u32("a\xe2\x82\xacz");  // euro sign
  CHECK(w.size() == 3);
  CHECK(to_utf8(w) == "a\xe2\x82\xacz");
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(to_u32("\xff"), agspell::Utf8Error);
  CHECK_THROWS_AS(to_u32("a\xc3"), agspell::Utf8Error);        // truncated
  CHECK_THROWS_AS(to_u32("\xc3\x28"), agspell::Utf8Error);     // bad tail
  CHECK_THROWS_AS(to_u32("\xc0\xaf"), agspell::Utf8Error);     // overlong
  CHECK_THROWS_AS(to_u32("\xed\xa0\x80"), agspell::Utf8Error); // surrogate
}

TEST_CASE("single code point helper") {
  CHECK(to_utf8(U'ç') == "ç");
  CHECK(to_utf8(U'k') == "k");
}

}  // TEST_SUITE
