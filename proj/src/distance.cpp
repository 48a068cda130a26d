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

#include "agspell/distance.hpp"

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace agspell {

int qgram_distance(StrView x, StrView y, int q) {
  if (q < 1) throw std::invalid_argument("q-gram size must be positive");
  const auto width = static_cast<std::size_t>(q);
  std::map<Str, int> balance;
  if (x.size() >= width)
    for (std::size_t i = 0; i + width <= x.size(); ++i)
      ++balance[Str(x.substr(i, width))];
  if (y.size() >= width)
    for (std::size_t i = 0; i + width <= y.size(); ++i)
      --balance[Str(y.substr(i, width))];
  int total = 0;
  for (const auto& [gram, diff] : balance) total += std::abs(diff);
  return total;
}

ErrorMatrix::ErrorMatrix(StrView x) : x_(x) {
  std::vector<int> base(x_.size() + 1);
  for (std::size_t i = 0; i <= x_.size(); ++i) base[i] = static_cast<int>(i);
  columns_.push_back(std::move(base));
}

void ErrorMatrix::extend(char32_t c) {
  y_.push_back(c);
  const std::size_t m = x_.size();
  const std::size_t j = y_.size();
  const std::vector<int>& prev = columns_[j - 1];
  std::vector<int> col(m + 1);
  col[0] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    if (x_[i - 1] == c) {
      col[i] = prev[i - 1];
    } else if (i >= 2 && j >= 2 && x_[i - 1] == y_[j - 2] &&
               x_[i - 2] == c) {
      col[i] = 1 + std::min({columns_[j - 2][i - 2], prev[i - 1], prev[i],
                             col[i - 1]});
    } else {
      col[i] = 1 + std::min({prev[i - 1], prev[i], col[i - 1]});
    }
  }
  cells_ += m;
  columns_.push_back(std::move(col));
}

void ErrorMatrix::truncate(std::size_t length) {
  if (length >= y_.size()) return;
  y_.resize(length);
  columns_.resize(length + 1);
}

void ErrorMatrix::sync(StrView target) {
  std::size_t common = 0;
  while (common < y_.size() && common < target.size() &&
         y_[common] == target[common])
    ++common;
  truncate(common);
  for (std::size_t i = common; i < target.size(); ++i) extend(target[i]);
}

int ErrorMatrix::cutoff(int t) const {
  const auto m = static_cast<std::ptrdiff_t>(x_.size());
  const auto n = static_cast<std::ptrdiff_t>(y_.size());
  if (m == 0) return static_cast<int>(n);
  // An empty partial word can still grow into x itself, error-free.
  if (n == 0) return 0;
  if (n >= m + t) return static_cast<int>(n - m);
  std::ptrdiff_t lo, hi;
  if (n <= t) {
    lo = 1;
    hi = std::min(n + t, m);
  } else if (n <= m) {
    lo = std::max<std::ptrdiff_t>(1, n - t);
    hi = std::min(n + t, m);
  } else {
    lo = n - t;
    hi = m;
  }
  if (hi < lo) hi = lo;
  int best = INT_MAX;
  for (std::ptrdiff_t i = lo; i <= hi; ++i)
    best = std::min(best, columns_[n][i]);
  return best;
}

int edit_distance(StrView x, StrView y, std::uint64_t* cells) {
  ErrorMatrix matrix(x);
  for (char32_t c : y) matrix.extend(c);
  if (cells) *cells += matrix.cells();
  return matrix.distance();
}

AlignmentResult prefix_edit_distance(StrView x, StrView y,
                                     std::uint64_t* cells) {
  AlignmentResult out;
  if (x.empty()) {
    out.pred = static_cast<int>(y.size());
    return out;
  }
  ErrorMatrix matrix(x);
  for (char32_t c : y) matrix.extend(c);
  if (cells) *cells += matrix.cells();
  out.pred = INT_MAX;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    int v = matrix.at(i, y.size());
    if (v < out.pred) {
      out.pred = v;
      out.indexes.assign(1, i);
    } else if (v == out.pred) {
      out.indexes.push_back(i);
    }
  }
  return out;
}

int cutoff_distance(StrView x, StrView y, int t, std::uint64_t* cells) {
  ErrorMatrix matrix(x);
  for (char32_t c : y) matrix.extend(c);
  if (cells) *cells += matrix.cells();
  return matrix.cutoff(t);
}

}  // namespace agspell
