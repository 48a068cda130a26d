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

#include "agspell/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "agspell/distance.hpp"

namespace agspell {

EditScript extract_script(StrView x, StrView y, const LanguageDefinition& def) {
  ErrorMatrix matrix(x);
  for (char32_t c : y) matrix.extend(c);

  EditScript ops;
  std::size_t i = x.size();
  std::size_t j = y.size();
  while (i > 0 || j > 0) {
    const int h = matrix.at(i, j);
    if (i > 0 && j > 0 && x[i - 1] == y[j - 1] &&
        h == matrix.at(i - 1, j - 1)) {
      --i;
      --j;
      continue;
    }
    if (i > 0 && j > 0 && h == matrix.at(i - 1, j - 1) + 1) {
      ops.push_back({EditOpKind::kReplace, i - 1, x[i - 1], y[j - 1],
                     def.is_special_pair(x[i - 1], y[j - 1])});
      --i;
      --j;
      continue;
    }
    if (i > 1 && j > 1 && x[i - 1] == y[j - 2] && x[i - 2] == y[j - 1] &&
        h == matrix.at(i - 2, j - 2) + 1) {
      ops.push_back({EditOpKind::kTranspose, i - 2, x[i - 2], x[i - 1], false});
      i -= 2;
      j -= 2;
      continue;
    }
    if (i > 0 && h == matrix.at(i - 1, j) + 1) {
      ops.push_back({EditOpKind::kDelete, i - 1, x[i - 1], 0, false});
      --i;
      continue;
    }
    ops.push_back({EditOpKind::kInsert, i, 0, y[j - 1], false});
    --j;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace {

double weight_of(double percent) { return -std::log(percent / 100.0); }

}  // namespace

double score(const EditScript& script, const LanguageDefinition& def) {
  const ErrorStats& st = def.error_stats;
  double total = 0;
  for (const EditOp& op : script) {
    switch (op.kind) {
      case EditOpKind::kReplace:
        total += weight_of(op.special ? st.special_replacement_share
                                      : st.replacement);
        break;
      case EditOpKind::kInsert:
        total += weight_of(st.deletion);
        break;
      case EditOpKind::kDelete:
        total += weight_of(st.insertion);
        break;
      case EditOpKind::kTranspose:
        total += weight_of(st.transposition);
        break;
    }
  }
  return total;
}

std::vector<Suggestion> rank(const std::vector<Candidate>& candidates,
                             StrView x, const LanguageDefinition& def) {
  std::vector<Suggestion> out;
  out.reserve(candidates.size());
  for (const Candidate& cand : candidates) {
    Suggestion s;
    s.candidate = cand;
    s.score = score(extract_script(x, cand.surface, def), def);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const Suggestion& a, const Suggestion& b) {
              if (a.candidate.distance != b.candidate.distance)
                return a.candidate.distance < b.candidate.distance;
              if (a.score != b.score) return a.score < b.score;
              if (a.candidate.surface.size() != b.candidate.surface.size())
                return a.candidate.surface.size() > b.candidate.surface.size();
              return a.candidate.surface < b.candidate.surface;
            });
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].rank = static_cast<int>(i) + 1;
  return out;
}

}  // namespace agspell
