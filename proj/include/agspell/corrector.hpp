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

#include "agspell/langdef.hpp"
#include "agspell/rootindex.hpp"
#include "agspell/surface.hpp"
#include "agspell/text.hpp"

namespace agspell {

// A valid word within the error threshold of the input, with every reading
// that produces it.
struct Candidate {
  Str surface;
  int distance = 0;
  std::vector<Analysis> analyses;
};

// Work counters for one correction run.
struct CorrectionStats {
  std::uint64_t recognitions = 0;  // whole-word analyses attempted
  std::uint64_t generations = 0;   // surface realizations produced
  std::uint64_t edit_ops = 0;      // distance matrix cells evaluated
  std::uint64_t solutions = 0;     // distinct candidates found

  CorrectionStats& operator+=(const CorrectionStats& other) {
    recognitions += other.recognitions;
    generations += other.generations;
    edit_ops += other.edit_ops;
    solutions += other.solutions;
    return *this;
  }
};

struct SearchOptions {
  int threshold = 1;          // maximum edit distance of a candidate
  int k = 3;                  // leading q-grams used by the prefilter
  int t_q = 2;                // q-gram tolerance of the prefilter
  bool use_prefilter = true;  // q-gram prefilter before the exact root scan
  bool use_pruning = true;    // cutoff pruning; otherwise length-bounded
};

// Threshold the search applies while a partial candidate still ends in a
// character that boundary rules may rewrite: the final column of the matrix
// is provisional there, so one extra error of slack keeps such branches
// alive. Final acceptance always uses the plain threshold.
int effective_threshold(StrView candidate, int threshold,
                        const LanguageDefinition& def);

// Candidates found by splicing rather than searching: for each given root
// whose cheapest prefix match against the word costs exactly the threshold,
// no error budget remains, so the rest of the word must occur verbatim. The
// root's lexical form plus the word's remainder (at every cheapest alignment
// point) is realized and kept when it is a valid word within the threshold.
std::vector<Candidate> left_edge_solutions(StrView word, int threshold,
                                           const std::vector<int>& root_ids,
                                           const LanguageDefinition& def,
                                           CorrectionStats* stats = nullptr);

// All valid words within options.threshold of the word, sorted by surface
// form. Retrieval finds plausible roots, then a depth-first walk of the
// morphotactics extends each one while the error matrix stays within reach.
std::vector<Candidate> generate_candidates(StrView word,
                                           const LanguageDefinition& def,
                                           const QGramIndex& index,
                                           const SearchOptions& options,
                                           CorrectionStats* stats = nullptr);

}  // namespace agspell
