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

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include <agspell/distance.hpp>
#include <agspell/text.hpp>

#include "oracles.hpp"

using agspell::AlignmentResult;
using agspell::cutoff_distance;
using agspell::edit_distance;
using agspell::ErrorMatrix;
using agspell::prefix_edit_distance;
using agspell::qgram_distance;
using agspell::Str;
using agspell::to_u32;

namespace {

Str random_word(std::mt19937& rng, const Str& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Str w;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[pick(rng)]);
  return w;
}

}  // namespace

TEST_SUITE("distance") {

TEST_CASE("qgram distance counts grams with multiplicity") {
  CHECK(qgram_distance(to_u32("ahmet"), to_u32("mehmet"), 2) == 3);
  CHECK(qgram_distance(to_u32("ahmet"), to_u32("mehmet"), 3) == 3);
  CHECK(qgram_distance(U"aaaa", U"aaa", 2) == 1);  // aa x3 vs aa x2
  CHECK(qgram_distance(U"abc", U"abc", 2) == 0);
  CHECK(qgram_distance(U"a", U"ab", 2) == 1);  // short side has no grams
  CHECK(qgram_distance(U"", U"ab", 2) == 1);
  CHECK(qgram_distance(U"ab", U"ba", 2) == 2);
  CHECK_THROWS_AS(qgram_distance(U"ab", U"ba", 0), std::invalid_argument);
}

TEST_CASE("edit distance on the frozen pairs") {
  CHECK(edit_distance(to_u32("kalayhla"), to_u32("kalayla")) == 1);
  CHECK(edit_distance(to_u32("kalay"), to_u32("kalas")) == 1);
  CHECK(edit_distance(to_u32("kala"), to_u32("yatay")) == 3);
  CHECK(edit_distance(to_u32("kalay"), to_u32("yatay")) == 2);
  CHECK(edit_distance(to_u32("kalayh"), to_u32("yatay")) == 3);
}

TEST_CASE("edit distance basics") {
  CHECK(edit_distance(U"", U"") == 0);
  CHECK(edit_distance(U"abc", U"") == 3);
  CHECK(edit_distance(U"", U"abc") == 3);
  CHECK(edit_distance(U"abc", U"abc") == 0);
  CHECK(edit_distance(U"ab", U"ba") == 1);    // one transposition
  CHECK(edit_distance(U"abcd", U"badc") == 2);
  CHECK(edit_distance(U"gelmke", U"gelmek") == 1);
}

TEST_CASE("edit distance is symmetric and obeys unit bounds") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Str a = random_word(rng, U"abcde", 9);
    Str b = random_word(rng, U"abcde", 9);
    int d = edit_distance(a, b);
    CHECK(d == edit_distance(b, a));
    CHECK(d >= std::abs(static_cast<int>(a.size()) -
                        static_cast<int>(b.size())));
    CHECK(d <= static_cast<int>(std::max(a.size(), b.size())));
  }
}

TEST_CASE("edit distance agrees with the breadth-first oracle") {
  // Small version of the exhaustive acceptance run.
  std::vector<Str> strings{U""};
  for (std::size_t i = 0; i < strings.size() && strings[i].size() < 4; ++i) {
    for (char32_t c : U"ab") {
      if (c == 0) continue;
      strings.push_back(strings[i] + c);
    }
  }
  for (const Str& x : strings) {
    auto ball = oracle::edit_ball(x, U"ab", 4, 8);
    for (const Str& y : strings) {
      auto it = ball.find(y);
      REQUIRE(it != ball.end());
      CHECK(edit_distance(x, y) == it->second);
    }
  }
}

TEST_CASE("matrix cells match a from-scratch recurrence") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    Str x = random_word(rng, U"abcd", 8);
    Str y = random_word(rng, U"abcd", 8);
    auto h = oracle::naive_matrix(x, y);
    ErrorMatrix matrix(x);
    for (char32_t c : y) matrix.extend(c);
    for (std::size_t i = 0; i <= x.size(); ++i)
      for (std::size_t j = 0; j <= y.size(); ++j)
        CHECK(matrix.at(i, j) == h[i][j]);
    CHECK(matrix.distance() == edit_distance(x, y));
  }
}

TEST_CASE("random extend, truncate and sync keep the matrix exact") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  for (int round = 0; round < 60; ++round) {
    Str x = random_word(rng, U"abcd", 10);
    ErrorMatrix matrix(x);
    Str y;
    for (int step = 0; step < 60; ++step) {
      switch (op(rng)) {
        case 0: {
          char32_t c = U"abcd"[pick(rng)];
          y.push_back(c);
          matrix.extend(c);
          break;
        }
        case 1: {
          std::uniform_int_distribution<std::size_t> cut(0, y.size());
          y.resize(cut(rng));
          matrix.truncate(y.size());
          break;
        }
        default: {
          Str target = random_word(rng, U"abcd", 10);
          y = target;
          matrix.sync(target);
          break;
        }
      }
      REQUIRE(matrix.y() == y);
      auto h = oracle::naive_matrix(x, y);
      for (std::size_t j = 0; j <= y.size(); ++j)
        CHECK(matrix.at(x.size(), j) == h[x.size()][j]);
      CHECK(matrix.distance() == h[x.size()][y.size()]);
    }
  }
}

TEST_CASE("matrix counts evaluated cells") {
  Str x = U"abc";
  ErrorMatrix matrix(x);
  CHECK(matrix.cells() == 0);
  matrix.extend(U'a');
  CHECK(matrix.cells() == 3);
  matrix.extend(U'b');
  CHECK(matrix.cells() == 6);
  matrix.truncate(1);
  CHECK(matrix.cells() == 6);  // truncation reuses, never recomputes
  matrix.sync(U"ab");          // common prefix a, one new column
  CHECK(matrix.cells() == 9);
}

TEST_CASE("prefix edit distance on the frozen pairs") {
  AlignmentResult r = prefix_edit_distance(to_u32("kalayhlamak"),
                                           to_u32("kalayla"));
  CHECK(r.pred == 1);
  CHECK(r.indexes == std::vector<std::size_t>{8});

  r = prefix_edit_distance(to_u32("kalayhlamak"), to_u32("kalas"));
  CHECK(r.pred == 1);
  CHECK(r.indexes == std::vector<std::size_t>{4, 5});
}

TEST_CASE("prefix edit distance scans every nonempty prefix") {
  std::mt19937 rng(17);
  for (int round = 0; round < 300; ++round) {
    Str x = random_word(rng, U"abc", 9);
    Str y = random_word(rng, U"abc", 6);
    if (x.empty()) continue;
    int best = INT_MAX;
    std::vector<std::size_t> where;
    for (std::size_t i = 1; i <= x.size(); ++i) {
      int d = edit_distance(x.substr(0, i), y);
      if (d < best) {
        best = d;
        where.clear();
      }
      if (d == best) where.push_back(i);
    }
    AlignmentResult r = prefix_edit_distance(x, y);
    CHECK(r.pred == best);
    CHECK(r.indexes == where);
  }
}

TEST_CASE("cutoff bounds every completion") {
  CHECK(cutoff_distance(to_u32("kalayhlamak"), to_u32("kalas"), 1) == 1);

  // Whenever some extension of y lands within t of x, the cutoff after y
  // must still be within t; pruning on it can never lose that extension.
  std::mt19937 rng(19);
  for (int round = 0; round < 500; ++round) {
    Str x = random_word(rng, U"ab", 8);
    Str y = random_word(rng, U"ab", 6);
    Str suffix = random_word(rng, U"ab", 4);
    for (int t = 0; t <= 3; ++t) {
      if (edit_distance(x, y + suffix) <= t) {
        CHECK(cutoff_distance(x, y, t) <= t);
      }
    }
  }
}

TEST_CASE("cutoff never prunes a true solution") {
  // For every split of a target within threshold, the cutoff at the split
  // point stays within the threshold.
  std::mt19937 rng(23);
  for (int round = 0; round < 400; ++round) {
    Str x = random_word(rng, U"abc", 8);
    Str target = random_word(rng, U"abc", 8);
    int d = edit_distance(x, target);
    for (int t = d; t <= d + 1 && t <= 4; ++t) {
      for (std::size_t cut = 0; cut <= target.size(); ++cut) {
        CHECK(cutoff_distance(x, target.substr(0, cut), t) <= t);
      }
    }
  }
}

TEST_CASE("diagonals of the matrix never decrease") {
  std::mt19937 rng(29);
  for (int round = 0; round < 300; ++round) {
    Str x = random_word(rng, U"abcd", 10);
    Str y = random_word(rng, U"abcd", 10);
    auto h = oracle::naive_matrix(x, y);
    ErrorMatrix matrix(x);
    for (char32_t c : y) matrix.extend(c);
    for (std::size_t i = 1; i <= x.size(); ++i)
      for (std::size_t j = 1; j <= y.size(); ++j)
        CHECK(matrix.at(i, j) >= matrix.at(i - 1, j - 1));
  }
}

}  // TEST_SUITE
