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

#include "agspell/corpus.hpp"

#include <algorithm>
#include <istream>
#include <string>
#include <thread>

namespace agspell {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusRecord> parse_corpus(std::istream& in,
                                       std::size_t* skipped) {
  if (skipped) *skipped = 0;
  std::vector<CorpusRecord> records;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t tab = line.find('\t');
    std::string first = strip(tab == std::string::npos ? line
                                                       : line.substr(0, tab));
    std::string second;
    bool bad = false;
    if (tab != std::string::npos) {
      std::string rest = line.substr(tab + 1);
      if (rest.find('\t') != std::string::npos) bad = true;
      second = strip(rest);
    }
    CorpusRecord record;
    if (!bad && !first.empty()) {
      try {
        record.misspelled = to_u32(first);
        if (!second.empty()) record.intended = to_u32(second);
      } catch (const Utf8Error&) {
        bad = true;
      }
    } else {
      bad = true;
    }
    if (bad) {
      if (skipped) ++*skipped;
      continue;
    }
    records.push_back(std::move(record));
  }
  return records;
}

BatchReport run_batch(const std::vector<CorpusRecord>& corpus,
                      const LanguageDefinition& def, const QGramIndex& index,
                      const SearchOptions& options, int jobs) {
  BatchReport report;
  report.words.resize(corpus.size());

  auto correct_one = [&](std::size_t i) {
    WordReport& wr = report.words[i];
    wr.record = corpus[i];
    std::vector<Candidate> candidates =
        generate_candidates(corpus[i].misspelled, def, index, options,
                            &wr.stats);
    wr.suggestions = rank(candidates, corpus[i].misspelled, def);
    if (corpus[i].intended) {
      for (const Suggestion& s : wr.suggestions) {
        if (s.candidate.surface == *corpus[i].intended) {
          wr.intended_found = true;
          wr.intended_rank = s.rank;
          break;
        }
      }
    }
  };

  const std::size_t n = corpus.size();
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) correct_one(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) correct_one(i);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (const WordReport& wr : report.words) {
    report.totals += wr.stats;
    if (wr.record.intended) {
      ++report.with_intended;
      if (wr.intended_found) ++report.found;
      if (wr.intended_rank == 1) ++report.first;
    }
  }
  if (n > 0) {
    const double dn = static_cast<double>(n);
    report.mean_recognitions = static_cast<double>(report.totals.recognitions) / dn;
    report.mean_generations = static_cast<double>(report.totals.generations) / dn;
    report.mean_edit_ops = static_cast<double>(report.totals.edit_ops) / dn;
    report.mean_solutions = static_cast<double>(report.totals.solutions) / dn;
  }
  if (report.with_intended > 0) {
    const double dw = static_cast<double>(report.with_intended);
    report.accuracy_found = 100.0 * static_cast<double>(report.found) / dw;
    report.accuracy_first = 100.0 * static_cast<double>(report.first) / dw;
  }
  return report;
}

}  // namespace agspell
