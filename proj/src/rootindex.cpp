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

#include "agspell/rootindex.hpp"

#include <algorithm>
#include <bit>

#include "agspell/distance.hpp"

namespace agspell {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && size_ % 64 != 0)
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> BitVector::ones() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(static_cast<int>(i));
  return out;
}

QGramIndex build_index(const LanguageDefinition& def, int q) {
  QGramIndex index;
  index.q = q;
  index.root_count = def.roots.size();
  const auto width = static_cast<std::size_t>(q);
  for (const Root& root : def.roots) {
    if (root.surface.size() < width) continue;
    for (std::size_t i = 0; i + width <= root.surface.size(); ++i) {
      Str gram(root.surface.substr(i, width));
      auto [it, inserted] =
          index.grams.try_emplace(std::move(gram), index.root_count, false);
      it->second.set(static_cast<std::size_t>(root.id));
    }
  }
  return index;
}

BitVector prefilter_roots(const QGramIndex& index, StrView word,
                          const RootQuery& query) {
  const auto width = static_cast<std::size_t>(index.q);
  if (query.k < 1 || word.size() < width + query.k - 1)
    return BitVector(index.root_count, true);

  const int k = query.k;
  const int subset_size = k - std::min(query.t_q, k - 1);

  const BitVector empty(index.root_count, false);
  std::vector<const BitVector*> posts;
  posts.reserve(k);
  for (int g = 0; g < k; ++g) {
    auto it = index.grams.find(Str(word.substr(g, width)));
    posts.push_back(it == index.grams.end() ? &empty : &it->second);
  }

  BitVector survivors(index.root_count, false);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != subset_size) continue;
    BitVector intersection(index.root_count, true);
    for (int g = 0; g < k; ++g)
      if ((mask >> g) & 1) intersection &= *posts[g];
    survivors |= intersection;
  }
  return survivors;
}

std::vector<int> candidate_roots(const LanguageDefinition& def,
                                 const QGramIndex& index, StrView word,
                                 const RootQuery& query, bool use_prefilter) {
  std::vector<int> out;
  auto check = [&](int id) {
    if (prefix_edit_distance(word, def.roots[id].surface).pred <= query.t)
      out.push_back(id);
  };
  if (use_prefilter) {
    for (int id : prefilter_roots(index, word, query).ones()) check(id);
  } else {
    for (const Root& root : def.roots) check(root.id);
  }
  return out;
}

}  // namespace agspell
