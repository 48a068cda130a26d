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

#include <vector>

#include "agspell/corrector.hpp"
#include "agspell/langdef.hpp"
#include "agspell/text.hpp"

namespace agspell {

enum class EditOpKind { kReplace, kInsert, kDelete, kTranspose };

// One step of a canonical script converting the typed word into a candidate.
// Positions index the typed word (0-based). kInsert adds `to` before that
// position; kDelete removes `from` at it; kTranspose swaps the typed pair
// (from, to) starting there.
struct EditOp {
  EditOpKind kind = EditOpKind::kReplace;
  std::size_t position = 0;
  char32_t from = 0;
  char32_t to = 0;
  bool special = false;  // replacement within a special confusion pair

  bool operator==(const EditOp&) const = default;
};

using EditScript = std::vector<EditOp>;

struct Suggestion {
  Candidate candidate;
  double score = 0;  // lower is more plausible
  int rank = 0;      // 1-based position in the sorted order
};

// Canonical minimal script from x to y, recovered by walking the distance
// matrix back from the corner. Where several steps explain a cell equally,
// the walk prefers match, then replacement, transposition, deletion and
// insertion, so equal inputs always yield the same script.
EditScript extract_script(StrView x, StrView y, const LanguageDefinition& def);

// Sum of operation weights, each -ln of the relative frequency of the typing
// error that the operation repairs: a script insertion means the typist
// dropped a character, a script deletion means one was added. Replacements
// within a special confusion pair use their own, higher frequency.
double score(const EditScript& script, const LanguageDefinition& def);

// Scores every candidate against the typed word and orders them: distance
// first, then score, with longer and lexicographically earlier surface forms
// breaking the remaining ties. Ranks number the sorted positions from 1.
std::vector<Suggestion> rank(const std::vector<Candidate>& candidates,
                             StrView x, const LanguageDefinition& def);

}  // namespace agspell
