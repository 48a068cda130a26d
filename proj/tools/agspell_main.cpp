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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "agspell/corpus.hpp"
#include "agspell/corrector.hpp"
#include "agspell/langdef.hpp"
#include "agspell/ranking.hpp"
#include "agspell/rootindex.hpp"
#include "agspell/surface.hpp"
#include "agspell/text.hpp"

namespace {

using agspell::BatchReport;
using agspell::Candidate;
using agspell::CorpusRecord;
using agspell::CorrectionStats;
using agspell::LanguageDefinition;
using agspell::QGramIndex;
using agspell::SearchOptions;
using agspell::Str;
using agspell::Suggestion;
using agspell::WordReport;
using ordered_json = nlohmann::ordered_json;

struct Params {
  std::string lang;
  std::string word;
  std::string corpus;
  int threshold = 1;
  int q = 2;
  int k = 3;
  int tq = 2;
  int jobs = 1;
  bool stats = false;
  bool json = false;
  bool no_prune = false;
  bool no_prefilter = false;
};

void add_search_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("-t,--threshold", p.threshold,
                  "maximum edit distance of a suggestion")
      ->check(CLI::Range(0, 3));
  cmd->add_option("--q", p.q, "q-gram width of the root index")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--k", p.k, "leading q-grams consulted by the prefilter")
      ->check(CLI::Range(1, 16));
  cmd->add_option("--tq", p.tq, "q-grams an error may disturb")
      ->check(CLI::Range(0, 15));
  cmd->add_flag("--stats", p.stats, "append work counters to the output");
  cmd->add_flag("--json", p.json, "structured output instead of TSV");
  cmd->add_flag("--no-prune", p.no_prune,
                "disable cut-off pruning (length-bounded search)");
  cmd->add_flag("--no-prefilter", p.no_prefilter,
                "bypass the q-gram root prefilter");
}

SearchOptions search_options(const Params& p) {
  SearchOptions options;
  options.threshold = p.threshold;
  options.k = p.k;
  options.t_q = p.tq;
  options.use_prefilter = !p.no_prefilter;
  options.use_pruning = !p.no_prune;
  return options;
}

double rounded_score(double score) {
  return std::round(score * 10000.0) / 10000.0;
}

std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", score);
  return buf;
}

std::string first_lexical(const Suggestion& s) {
  if (s.candidate.analyses.empty()) return "-";
  return agspell::to_utf8(s.candidate.analyses.front().lexical);
}

void print_stats_line(const CorrectionStats& stats) {
  std::cout << "# stats\trecognitions=" << stats.recognitions
            << "\tgenerations=" << stats.generations
            << "\tedit_ops=" << stats.edit_ops
            << "\tsolutions=" << stats.solutions << "\n";
}

ordered_json stats_json(const CorrectionStats& stats) {
  ordered_json out;
  out["recognitions"] = stats.recognitions;
  out["generations"] = stats.generations;
  out["edit_ops"] = stats.edit_ops;
  out["solutions"] = stats.solutions;
  return out;
}

int cmd_check(const Params& p) {
  LanguageDefinition def = agspell::load_language_file(p.lang);
  const bool ok = agspell::recognize(agspell::to_u32(p.word), def);
  std::cout << (ok ? "OK" : "MISSPELLED") << "\n";
  return ok ? 0 : 1;
}

int cmd_suggest(const Params& p) {
  LanguageDefinition def = agspell::load_language_file(p.lang);
  QGramIndex index = agspell::build_index(def, p.q);
  Str word = agspell::to_u32(p.word);
  CorrectionStats stats;
  std::vector<Candidate> candidates =
      agspell::generate_candidates(word, def, index, search_options(p), &stats);
  std::vector<Suggestion> suggestions = agspell::rank(candidates, word, def);

  if (p.json) {
    ordered_json out;
    out["word"] = p.word;
    out["threshold"] = p.threshold;
    ordered_json rows = ordered_json::array();
    for (const Suggestion& s : suggestions) {
      ordered_json row;
      row["rank"] = s.rank;
      row["surface"] = agspell::to_utf8(s.candidate.surface);
      row["distance"] = s.candidate.distance;
      row["score"] = rounded_score(s.score);
      row["lexical"] = first_lexical(s);
      rows.push_back(std::move(row));
    }
    out["suggestions"] = std::move(rows);
    if (p.stats) out["stats"] = stats_json(stats);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Suggestion& s : suggestions)
      std::cout << s.rank << "\t" << agspell::to_utf8(s.candidate.surface)
                << "\t" << s.candidate.distance << "\t"
                << format_score(rounded_score(s.score)) << "\t"
                << first_lexical(s) << "\n";
    if (p.stats) print_stats_line(stats);
  }
  if (suggestions.empty()) std::cerr << "no suggestions\n";
  return 0;
}

std::string format_mean(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string format_accuracy(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

int cmd_batch(const Params& p) {
  LanguageDefinition def = agspell::load_language_file(p.lang);
  QGramIndex index = agspell::build_index(def, p.q);
  std::ifstream in(p.corpus, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open corpus '" << p.corpus << "'\n";
    return 2;
  }
  std::size_t skipped = 0;
  std::vector<CorpusRecord> corpus = agspell::parse_corpus(in, &skipped);
  if (skipped > 0)
    std::cerr << "warning: skipped " << skipped
              << " malformed corpus line(s)\n";
  BatchReport report =
      agspell::run_batch(corpus, def, index, search_options(p), p.jobs);
  report.skipped = skipped;

  if (p.json) {
    ordered_json out;
    ordered_json rows = ordered_json::array();
    for (const WordReport& wr : report.words) {
      ordered_json row;
      row["word"] = agspell::to_utf8(wr.record.misspelled);
      if (wr.record.intended)
        row["intended"] = agspell::to_utf8(*wr.record.intended);
      else
        row["intended"] = nullptr;
      row["recognitions"] = wr.stats.recognitions;
      row["generations"] = wr.stats.generations;
      row["edit_ops"] = wr.stats.edit_ops;
      row["solutions"] = wr.stats.solutions;
      if (wr.record.intended) {
        row["found"] = wr.intended_found;
        row["rank"] = wr.intended_rank;
      } else {
        row["found"] = nullptr;
        row["rank"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    out["words"] = std::move(rows);
    ordered_json agg;
    agg["recognitions"] = format_mean(report.mean_recognitions);
    agg["generations"] = format_mean(report.mean_generations);
    agg["edit_ops"] = format_mean(report.mean_edit_ops);
    agg["solutions"] = format_mean(report.mean_solutions);
    agg["accuracy_found"] = format_accuracy(report.accuracy_found);
    agg["accuracy_first"] = format_accuracy(report.accuracy_first);
    out["aggregate"] = std::move(agg);
    out["skipped"] = report.skipped;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "# word\tintended\trecognitions\tgenerations\tedit_ops"
               "\tsolutions\tfound\trank\n";
  for (const WordReport& wr : report.words) {
    std::cout << agspell::to_utf8(wr.record.misspelled) << "\t"
              << (wr.record.intended ? agspell::to_utf8(*wr.record.intended)
                                     : "-")
              << "\t" << wr.stats.recognitions << "\t" << wr.stats.generations
              << "\t" << wr.stats.edit_ops << "\t" << wr.stats.solutions
              << "\t";
    if (wr.record.intended)
      std::cout << (wr.intended_found ? "yes" : "no") << "\t"
                << wr.intended_rank << "\n";
    else
      std::cout << "-\t-\n";
  }
  std::cout << "AGGREGATE\t-\t" << format_mean(report.mean_recognitions)
            << "\t" << format_mean(report.mean_generations) << "\t"
            << format_mean(report.mean_edit_ops) << "\t"
            << format_mean(report.mean_solutions) << "\t"
            << format_accuracy(report.accuracy_found) << "\t"
            << format_accuracy(report.accuracy_first) << "\n";
  if (report.skipped > 0)
    std::cout << "# skipped\t" << report.skipped << "\n";
  return 0;
}

void print_interactive_help() {
  std::cerr << "directives:\n"
               "  :quit   end the session\n"
               "type a word to see suggestions, then a number to accept one\n";
}

int cmd_interactive(const Params& p) {
  LanguageDefinition def = agspell::load_language_file(p.lang);
  QGramIndex index = agspell::build_index(def, p.q);
  const SearchOptions options = search_options(p);
  std::string line;
  for (;;) {
    std::cerr << "word> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == ":quit") break;
    if (!line.empty() && line[0] == ':') {
      print_interactive_help();
      continue;
    }
    if (line.empty()) continue;
    Str word;
    try {
      word = agspell::to_u32(line);
    } catch (const agspell::Utf8Error& e) {
      std::cerr << "bad input: " << e.what() << "\n";
      continue;
    }
    std::vector<Candidate> candidates =
        agspell::generate_candidates(word, def, index, options, nullptr);
    std::vector<Suggestion> suggestions = agspell::rank(candidates, word, def);
    if (suggestions.empty()) {
      std::cerr << "no suggestions for '" << line << "'\n";
      continue;
    }
    for (const Suggestion& s : suggestions)
      std::cerr << "  " << s.rank << ") "
                << agspell::to_utf8(s.candidate.surface) << "  (distance "
                << s.candidate.distance << ", score "
                << format_score(rounded_score(s.score)) << ")\n";
    std::cerr << "accept [1-" << suggestions.size()
              << ", empty to skip]> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::size_t pick = 0;
    try {
      pick = static_cast<std::size_t>(std::stoul(line));
    } catch (const std::exception&) {
      continue;
    }
    if (pick >= 1 && pick <= suggestions.size())
      std::cout << agspell::to_utf8(suggestions[pick - 1].candidate.surface)
                << "\n";
  }
  return 0;
}

int cmd_validate_pack(const Params& p) {
  LanguageDefinition def = agspell::load_language_file(p.lang);
  std::cout << "pack OK: " << def.roots.size() << " roots, "
            << def.fsa.state_names.size() << " states, "
            << def.fsa.transitions.size() << " transitions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spelling correction for agglutinative languages"};
  app.require_subcommand(1);

  Params p;

  CLI::App* check = app.add_subcommand("check", "test whether a word is valid");
  check->add_option("--lang", p.lang, "language pack file")->required();
  check->add_option("word", p.word, "word to test")->required();

  CLI::App* suggest =
      app.add_subcommand("suggest", "list corrections for a word");
  suggest->add_option("--lang", p.lang, "language pack file")->required();
  suggest->add_option("word", p.word, "word to correct")->required();
  add_search_flags(suggest, p);

  CLI::App* batch =
      app.add_subcommand("batch", "correct a whole corpus and report stats");
  batch->add_option("--lang", p.lang, "language pack file")->required();
  batch->add_option("corpus", p.corpus, "TSV corpus file")->required();
  add_search_flags(batch, p);
  batch->add_option("--jobs", p.jobs, "parallel workers")
      ->check(CLI::Range(1, 256));

  CLI::App* interactive =
      app.add_subcommand("interactive", "review words in a prompt loop");
  interactive->add_option("--lang", p.lang, "language pack file")->required();
  add_search_flags(interactive, p);

  CLI::App* validate =
      app.add_subcommand("validate-pack", "load a pack and report problems");
  validate->add_option("--lang", p.lang, "language pack file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(p);
    if (suggest->parsed()) return cmd_suggest(p);
    if (batch->parsed()) return cmd_batch(p);
    if (interactive->parsed()) return cmd_interactive(p);
    if (validate->parsed()) return cmd_validate_pack(p);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
