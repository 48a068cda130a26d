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

#include <iosfwd>
#include <optional>
#include <vector>

#include "agspell/corrector.hpp"
#include "agspell/ranking.hpp"
#include "agspell/text.hpp"

namespace agspell {

struct CorpusRecord {
  Str misspelled;
  std::optional<Str> intended;  // ground truth when evaluating

  bool operator==(const CorpusRecord&) const = default;
};

struct WordReport {
  CorpusRecord record;
  std::vector<Suggestion> suggestions;
  CorrectionStats stats;
  bool intended_found = false;
  int intended_rank = 0;  // 0 when absent or no ground truth
};

struct BatchReport {
  std::vector<WordReport> words;
  CorrectionStats totals;
  double mean_recognitions = 0;
  double mean_generations = 0;
  double mean_edit_ops = 0;
  double mean_solutions = 0;
  std::size_t with_intended = 0;  // rows carrying ground truth
  std::size_t found = 0;          // intended among the suggestions
  std::size_t first = 0;          // intended ranked first
  double accuracy_found = 0;      // percent of rows with ground truth
  double accuracy_first = 0;      // percent of rows with ground truth
  std::size_t skipped = 0;        // malformed corpus lines
};

// Reads a TSV corpus: one word per line, optionally followed by a tab and the
// intended form. Blank lines and '#' comments are ignored. Malformed lines
// (empty word, stray tabs, bad UTF-8) are counted into *skipped when given.
std::vector<CorpusRecord> parse_corpus(std::istream& in,
                                       std::size_t* skipped = nullptr);

// Corrects every record and aggregates the work counters and accuracy
// ratios. `jobs` > 1 fans the words out to that many threads; reports always
// come back in corpus order.
BatchReport run_batch(const std::vector<CorpusRecord>& corpus,
                      const LanguageDefinition& def, const QGramIndex& index,
                      const SearchOptions& options, int jobs = 1);

}  // namespace agspell
