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
#include <vector>

#include "agspell/langdef.hpp"
#include "agspell/text.hpp"

namespace agspell {

// Raised when a lexical string cannot be realized, e.g. a metacharacter with
// neither a matching resolution rule nor a default.
class RealizeError : public std::runtime_error {
 public:
  explicit RealizeError(const std::string& message)
      : std::runtime_error(message) {}
};

// Realizes a full lexical string ("root+morpheme+morpheme") as a surface
// word. Boundary markers separate morphemes; each boundary applies deletion
// and mutation rules, and metacharacters resolve against the vowels realized
// so far.
Str surface(StrView lexical, const LanguageDefinition& def);

// Appends one lexical morpheme to an already realized prefix, applying the
// boundary rules between them. surface() is a fold of this over the
// morphemes of the lexical string; an empty prefix marks the first morpheme,
// which takes no boundary treatment.
Str surface_extend(StrView realized_prefix, StrView morpheme,
                   const LanguageDefinition& def);

// One way of reading a surface word: a root plus a path of transitions whose
// realization equals the word exactly.
struct Analysis {
  int root_id = -1;
  Str lexical;             // root lexical form joined with its morphemes
  std::vector<int> path;   // transition ids, in application order

  bool operator==(const Analysis&) const = default;
};

// All exact readings of a surface word. Empty when the word is not in the
// language.
std::vector<Analysis> analyze(StrView word, const LanguageDefinition& def);

// True when the word has at least one exact reading.
bool recognize(StrView word, const LanguageDefinition& def);

}  // namespace agspell
