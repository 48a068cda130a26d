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
#include <map>
#include <vector>

#include "agspell/langdef.hpp"
#include "agspell/text.hpp"

namespace agspell {

// Fixed-size bit set keyed by root id.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  std::size_t count() const;
  std::vector<int> ones() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Inverted index from q-gram to the set of roots whose surface form contains
// it.
struct QGramIndex {
  int q = 2;
  std::size_t root_count = 0;
  std::map<Str, BitVector> grams;
};

QGramIndex build_index(const LanguageDefinition& def, int q);

struct RootQuery {
  int k = 3;    // leading input q-grams that participate in the prefilter
  int t_q = 2;  // q-grams an error is allowed to disturb
  int t = 1;    // edit distance threshold for the exact filter
};

// Cheap superset of the roots worth checking exactly: the union, over every
// (k - t_q)-element subset of the input's first k q-grams, of the roots
// containing all grams in the subset. Fails open (every root) when the input
// is too short to supply k q-grams; t_q is capped at k - 1 so at least one
// gram always participates.
BitVector prefilter_roots(const QGramIndex& index, StrView word,
                          const RootQuery& query);

// Roots whose surface form lies within prefix edit distance t of the word,
// in increasing id order. The prefilter narrows the exact scan when enabled.
std::vector<int> candidate_roots(const LanguageDefinition& def,
                                 const QGramIndex& index, StrView word,
                                 const RootQuery& query,
                                 bool use_prefilter = true);

}  // namespace agspell
