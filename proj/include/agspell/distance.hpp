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

#include <cstdint>
#include <vector>

#include "agspell/text.hpp"

namespace agspell {

// Distance between the q-gram profiles of two words, counted with
// multiplicity: the sum over all q-grams of |count_x - count_y|. Words
// shorter than q contribute no q-grams at all.
int qgram_distance(StrView x, StrView y, int q);

// Edit distance with unit-cost insertions, deletions, replacements and
// transpositions of adjacent characters. When two adjacent characters are
// swapped between the words, the cell takes the cheapest of all four
// operations, not the transposition alone. If `cells` is non-null it is
// incremented by the number of dynamic-programming cells evaluated.
int edit_distance(StrView x, StrView y, std::uint64_t* cells = nullptr);

// Distance matrix between a fixed word x and a growing candidate y, built one
// column per candidate character so a depth-first search can extend and
// retract the candidate cheaply.
class ErrorMatrix {
 public:
  explicit ErrorMatrix(StrView x);

  // Appends one character to the candidate and computes its column.
  void extend(char32_t c);

  // Shrinks the candidate back to its first `length` characters.
  void truncate(std::size_t length);

  // Repositions the matrix at `target` by trimming to the longest common
  // prefix with the current candidate and extending with the remainder.
  void sync(StrView target);

  // H(i, j): distance between the first i characters of x and the first j of
  // the candidate.
  int at(std::size_t i, std::size_t j) const { return columns_[j][i]; }

  // Distance between x and the whole current candidate.
  int distance() const { return columns_.back()[x_.size()]; }

  // Lower bound on the distance between x and any word that starts with the
  // current candidate, assuming at most t errors. A value above t means no
  // extension of the candidate can succeed.
  int cutoff(int t) const;

  const Str& x() const { return x_; }
  const Str& y() const { return y_; }
  std::uint64_t cells() const { return cells_; }

 private:
  Str x_;
  Str y_;
  std::vector<std::vector<int>> columns_;
  std::uint64_t cells_ = 0;
};

// Result of matching a word prefix against a whole root: the smallest
// distance between any nonempty prefix of x and y, plus every prefix length
// that attains it.
struct AlignmentResult {
  int pred = 0;
  std::vector<std::size_t> indexes;

  bool operator==(const AlignmentResult&) const = default;
};

AlignmentResult prefix_edit_distance(StrView x, StrView y,
                                     std::uint64_t* cells = nullptr);

// Convenience form of ErrorMatrix::cutoff for a one-shot query.
int cutoff_distance(StrView x, StrView y, int t,
                    std::uint64_t* cells = nullptr);

}  // namespace agspell
