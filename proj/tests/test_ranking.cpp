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
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <agspell/corrector.hpp>
#include <agspell/distance.hpp>
#include <agspell/langdef.hpp>
#include <agspell/ranking.hpp>
#include <agspell/rootindex.hpp>
#include <agspell/text.hpp>

using agspell::Candidate;
using agspell::edit_distance;
using agspell::EditOp;
using agspell::EditOpKind;
using agspell::EditScript;
using agspell::extract_script;
using agspell::LanguageDefinition;
using agspell::load_language;
using agspell::load_language_file;
using agspell::rank;
using agspell::score;
using agspell::Str;
using agspell::Suggestion;
using agspell::to_u32;

namespace {

LanguageDefinition& mini() {
  static LanguageDefinition def =
      load_language_file(std::string(AGSPELL_DATA_DIR) + "/mini-turkish.lang");
  return def;
}

Str apply_script(Str x, const EditScript& script) {
  std::ptrdiff_t offset = 0;
  for (const EditOp& op : script) {
    auto p = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(op.position) + offset);
    switch (op.kind) {
      case EditOpKind::kReplace:
        REQUIRE(x.at(p) == op.from);
        x[p] = op.to;
        break;
      case EditOpKind::kInsert:
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(p), op.to);
        ++offset;
        break;
      case EditOpKind::kDelete:
        REQUIRE(x.at(p) == op.from);
        x.erase(p, 1);
        --offset;
        break;
      case EditOpKind::kTranspose:
        REQUIRE(x.at(p) == op.from);
        REQUIRE(x.at(p + 1) == op.to);
        std::swap(x[p], x[p + 1]);
        break;
    }
  }
  return x;
}

Candidate make(const Str& surface, int distance) {
  Candidate c;
  c.surface = surface;
  c.distance = distance;
  return c;
}

Candidate make(const char* surface, int distance) {
  return make(to_u32(surface), distance);
}

Str random_word(std::mt19937& rng, const Str& alphabet, std::size_t min_len,
                std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Str w;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[pick(rng)]);
  return w;
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("script for a special replacement") {
  EditScript s = extract_script(to_u32("catmak"), to_u32("çatmak"), mini());
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == EditOpKind::kReplace);
  CHECK(s[0].position == 0);
  CHECK(s[0].from == U'c');
  CHECK(s[0].to == U'ç');
  CHECK(s[0].special);
}

TEST_CASE("script for a transposition") {
  EditScript s = extract_script(to_u32("gelmke"), to_u32("gelmek"), mini());
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == EditOpKind::kTranspose);
  CHECK(s[0].position == 4);
  CHECK(s[0].from == U'k');
  CHECK(s[0].to == U'e');
}

TEST_CASE("script for a deletion and an insertion") {
  EditScript s =
      extract_script(to_u32("kalayhlamak"), to_u32("kalaylamak"), mini());
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == EditOpKind::kDelete);
  CHECK(s[0].position == 5);
  CHECK(s[0].from == U'h');

  s = extract_script(to_u32("evlerm"), to_u32("evlerim"), mini());
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == EditOpKind::kInsert);
  CHECK(s[0].position == 5);
  CHECK(s[0].to == U'i');
}

TEST_CASE("identical words need no script") {
  CHECK(extract_script(to_u32("kalas"), to_u32("kalas"), mini()).empty());
}

TEST_CASE("scripts replay and have minimal length") {
  std::mt19937 rng(47);
  Str alphabet = to_u32("açeklst");
  for (int round = 0; round < 600; ++round) {
    Str x = random_word(rng, alphabet, 0, 8);
    Str y = random_word(rng, alphabet, 0, 8);
    EditScript s = extract_script(x, y, mini());
    CHECK(static_cast<int>(s.size()) == edit_distance(x, y));
    CHECK(apply_script(x, s) == y);
  }
}

TEST_CASE("operation weights follow the error statistics") {
  auto single = [&](EditOpKind kind, bool special) {
    EditOp op;
    op.kind = kind;
    op.special = special;
    return score(EditScript{op}, mini());
  };
  CHECK(single(EditOpKind::kReplace, true) ==
        doctest::Approx(-std::log(0.34)));
  CHECK(single(EditOpKind::kReplace, false) ==
        doctest::Approx(-std::log(0.231)));
  CHECK(single(EditOpKind::kInsert, false) ==
        doctest::Approx(-std::log(0.222)));  // a dropped character
  CHECK(single(EditOpKind::kDelete, false) ==
        doctest::Approx(-std::log(0.173)));  // an added character
  CHECK(single(EditOpKind::kTranspose, false) ==
        doctest::Approx(-std::log(0.033)));
  CHECK(score(EditScript{}, mini()) == doctest::Approx(0.0));
}

TEST_CASE("scores accumulate per operation") {
  EditScript s =
      extract_script(to_u32("catişmak"), to_u32("çatışmak"), mini());
  REQUIRE(s.size() == 2);  // two special replacements
  CHECK(score(s, mini()) == doctest::Approx(-2 * std::log(0.34)));
}

TEST_CASE("special replacement outranks a transposition") {
  auto ranked = rank({make("actmak", 1), make("çatmak", 1)},
                     to_u32("catmak"), mini());
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].candidate.surface == to_u32("çatmak"));
  CHECK(ranked[0].rank == 1);
  CHECK(ranked[1].candidate.surface == to_u32("actmak"));
  CHECK(ranked[1].rank == 2);
  CHECK(ranked[0].score < ranked[1].score);
}

TEST_CASE("special beats transposition on random constructions") {
  std::mt19937 rng(53);
  Str alphabet = to_u32("açeklmst");
  int built = 0;
  while (built < 200) {
    Str w = random_word(rng, alphabet, 4, 9);
    // Plant a special-pair character, then derive both rivals.
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
    std::size_t i = at(rng);
    w[i] = U'ç';
    Str special = w;
    special[i] = U'c';
    std::size_t j = (i == 0) ? 1 : i - 1;
    if (j + 1 >= w.size() || w[j] == w[j + 1]) continue;
    Str swapped = w;
    std::swap(swapped[j], swapped[j + 1]);
    if (swapped == special || edit_distance(w, swapped) != 1) continue;
    // Candidates are judged against the typed word w.
    auto ranked = rank({make(swapped, 1), make(special, 1)}, w, mini());
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].candidate.surface == special);
    ++built;
  }
}

TEST_CASE("distance is the primary key") {
  auto ranked = rank({make("çatışmalarıyla", 2), make("çatmak", 1),
                      make("çalışmalarıyla", 1), make("çavmalarıyla", 2)},
                     to_u32("çaışmalarıyla"), mini());
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].candidate.distance == 1);
  CHECK(ranked[1].candidate.distance == 1);
  CHECK(ranked[2].candidate.distance == 2);
  CHECK(ranked[3].candidate.distance == 2);
  for (std::size_t i = 0; i < ranked.size(); ++i)
    CHECK(ranked[i].rank == static_cast<int>(i) + 1);
}

TEST_CASE("ranking is deterministic under input order") {
  std::vector<Candidate> candidates{
      make("çalışmalarıyla", 1), make("çatışmalarıyla", 1),
      make("çapışmalarıyla", 1), make("çavmalarıyla", 2),
      make("çatmalarıyla", 2)};
  auto baseline = rank(candidates, to_u32("çaışmalarıyla"), mini());
  std::mt19937 rng(59);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    auto again = rank(candidates, to_u32("çaışmalarıyla"), mini());
    REQUIRE(again.size() == baseline.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
      CHECK(again[i].candidate.surface == baseline[i].candidate.surface);
      CHECK(again[i].rank == baseline[i].rank);
      CHECK(again[i].score == baseline[i].score);
    }
  }
}

TEST_CASE("lexicographic order settles full ties") {
  auto ranked = rank({make("bba", 1), make("abb", 1)}, U"bb", mini());
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].candidate.surface == U"abb");  // equal score and length
  CHECK(ranked[1].candidate.surface == U"bba");
}

TEST_CASE("equal scores prefer the longer candidate") {
  // A pack whose replacement and deletion rates agree makes a replacement
  // repair and an insertion repair cost the same, so only length separates
  // the two candidates.
  std::string text =
      "[alphabet]\n"
      "chars = abgikm\n"
      "meta = V\n"
      "boundary = +\n"
      "[vowel-classes]\n"
      "class back = a\n"
      "class front = i\n"
      "[meta-resolution]\n"
      "V back -> a\n"
      "V front -> i\n"
      "default V -> a\n"
      "[roots]\n"
      "ba\tba\tnoun\n"
      "[states]\n"
      "N final\n"
      "[categories]\n"
      "noun -> N\n"
      "[transitions]\n"
      "N\tN\tbV\n"
      "[boundary-deletions]\n"
      "[final-mutations]\n"
      "[mutable-finals]\n"
      "chars =\n"
      "[special-pairs]\n"
      "[error-stats]\n"
      "replacement = 20\n"
      "deletion = 20\n"
      "insertion = 20\n"
      "transposition = 20\n"
      "special_replacement_share = 20\n";
  std::istringstream in(text);
  LanguageDefinition def = load_language(in);
  auto ranked = rank({make("ag", 1), make("agb", 1)}, U"ab", def);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].score == doctest::Approx(ranked[1].score));
  CHECK(ranked[0].candidate.surface == U"agb");
  CHECK(ranked[1].candidate.surface == U"ag");
}

TEST_CASE("engine candidates rank by plausibility") {
  using agspell::build_index;
  using agspell::generate_candidates;
  using agspell::SearchOptions;
  static agspell::QGramIndex index = build_index(mini(), 2);
  SearchOptions options;
  options.threshold = 1;

  // kalayn: the genitive (one dropped letter) beats the bare root (one
  // added letter) because dropped letters are the more common slip.
  auto candidates = generate_candidates(to_u32("kalayn"), mini(), index,
                                        options);
  auto ranked = rank(candidates, to_u32("kalayn"), mini());
  REQUIRE(ranked.size() >= 2);
  CHECK(ranked[0].candidate.surface == to_u32("kalayın"));

  // gelmke: the transposition repair is the textbook answer but ranks
  // below the deletion repair, mirroring how rare transpositions are.
  candidates = generate_candidates(to_u32("gelmke"), mini(), index, options);
  ranked = rank(candidates, to_u32("gelmke"), mini());
  REQUIRE(ranked.size() >= 2);
  CHECK(ranked[0].candidate.surface == to_u32("gelme"));
  CHECK(ranked[1].candidate.surface == to_u32("gelmek"));
}

}  // TEST_SUITE
