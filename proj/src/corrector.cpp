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

#include "agspell/corrector.hpp"

#include <algorithm>
#include <map>

#include "agspell/distance.hpp"

namespace agspell {

int effective_threshold(StrView candidate, int threshold,
                        const LanguageDefinition& def) {
  if (!candidate.empty() &&
      def.rules.mutable_final_chars.count(candidate.back()) != 0)
    return threshold + 1;
  return threshold;
}

namespace {

struct SearchFrame {
  Str lexical;
  Str surface;
  int state = -1;
  int root_id = -1;
  std::vector<int> path;
};

struct SearchLimits {
  int threshold = 0;
  bool use_pruning = true;
  std::size_t max_path = 0;  // stops cycles whose morphemes realize to nothing
};

// Records one reading of a surface word. A reading can arrive twice when a
// spliced candidate is also reached by the search, so readings are kept
// unique per surface.
void emit(std::map<Str, Candidate>& out, const Str& surface, int distance,
          Analysis analysis) {
  auto [it, inserted] = out.try_emplace(surface);
  Candidate& cand = it->second;
  if (inserted) {
    cand.surface = surface;
    cand.distance = distance;
  }
  if (std::find(cand.analyses.begin(), cand.analyses.end(), analysis) ==
      cand.analyses.end())
    cand.analyses.push_back(std::move(analysis));
}

// Depth-first walk of the morphotactics from the given seed roots. Frames
// pop in declaration order; the matrix follows the current frame, so sibling
// visits cost only the columns past the shared prefix.
void run_search(StrView word, const LanguageDefinition& def,
                const std::vector<int>& seeds, const SearchLimits& limits,
                std::map<Str, Candidate>& out, CorrectionStats* stats) {
  ErrorMatrix matrix(word);
  std::vector<SearchFrame> stack;
  for (std::size_t s = seeds.size(); s-- > 0;) {
    const Root& root = def.roots[seeds[s]];
    SearchFrame frame;
    try {
      frame.surface = surface(root.lexical, def);
    } catch (const RealizeError&) {
      continue;
    }
    if (stats) ++stats->generations;
    frame.lexical = root.lexical;
    frame.state = root.entry_state;
    frame.root_id = root.id;
    stack.push_back(std::move(frame));
  }
  while (!stack.empty()) {
    SearchFrame frame = std::move(stack.back());
    stack.pop_back();
    matrix.sync(frame.surface);
    if (def.fsa.is_final(frame.state) && matrix.distance() <= limits.threshold)
      emit(out, frame.surface, matrix.distance(),
           {frame.root_id, frame.lexical, frame.path});
    if (frame.path.size() >= limits.max_path) continue;
    const std::vector<int>& outgoing = def.fsa.transitions_from[frame.state];
    for (std::size_t i = outgoing.size(); i-- > 0;) {
      const int tid = outgoing[i];
      const Transition& tr = def.fsa.transitions[tid];
      Str child;
      try {
        child = surface_extend(frame.surface, tr.morpheme, def);
      } catch (const RealizeError&) {
        continue;
      }
      if (stats) ++stats->generations;
      if (limits.use_pruning) {
        matrix.sync(child);
        const int slack = effective_threshold(child, limits.threshold, def);
        if (matrix.cutoff(slack) > slack) continue;
      } else if (child.size() > word.size() + limits.threshold + 1) {
        continue;
      }
      SearchFrame next;
      next.lexical = frame.lexical;
      next.lexical += def.alphabet.boundary_char;
      next.lexical += tr.morpheme;
      next.surface = std::move(child);
      next.state = tr.to;
      next.root_id = frame.root_id;
      next.path = frame.path;
      next.path.push_back(tid);
      stack.push_back(std::move(next));
    }
  }
  if (stats) stats->edit_ops += matrix.cells();
}

// Roots whose surface form, or its boundary-mutated variant, is a literal
// prefix of the word. Exact analysis needs no fuzzy retrieval.
std::vector<int> exact_seed_roots(StrView word, const LanguageDefinition& def) {
  std::vector<int> seeds;
  for (const Root& root : def.roots) {
    const Str& s = root.surface;
    if (s.empty() || s.size() > word.size()) continue;
    if (word.substr(0, s.size()) == s) {
      seeds.push_back(root.id);
      continue;
    }
    if (def.rules.mutable_final_chars.count(s.back()) == 0) continue;
    for (const MutationRule& rule : def.rules.final_mutations) {
      if (rule.from != s.back()) continue;
      Str variant = s;
      variant.back() = rule.to;
      if (word.substr(0, variant.size()) == variant) {
        seeds.push_back(root.id);
        break;
      }
    }
  }
  return seeds;
}

}  // namespace

// The analyzer is the zero-error corrector: only roots that literally prefix
// the word are worth seeding, and the only acceptable surface is the word
// itself.
std::vector<Analysis> analyze(StrView word, const LanguageDefinition& def) {
  if (word.empty()) return {};
  SearchLimits limits;
  limits.threshold = 0;
  limits.use_pruning = true;
  limits.max_path = 2 * word.size() + 16;
  std::map<Str, Candidate> out;
  run_search(word, def, exact_seed_roots(word, def), limits, out, nullptr);
  auto it = out.find(Str(word));
  if (it == out.end()) return {};
  return std::move(it->second.analyses);
}

bool recognize(StrView word, const LanguageDefinition& def) {
  return !analyze(word, def).empty();
}

namespace {

// Splices one root: for each cheapest alignment point, realize the root's
// lexical form followed by the rest of the word, and keep the result when it
// is a valid word within the threshold.
void splice_root(StrView word, const Root& root,
                 const std::vector<std::size_t>& indexes, int threshold,
                 const LanguageDefinition& def, std::map<Str, Candidate>& out,
                 CorrectionStats* stats) {
  for (std::size_t split : indexes) {
    if (split > word.size()) continue;
    Str lexical = root.lexical;
    lexical += word.substr(split);
    Str realized;
    try {
      realized = surface(lexical, def);
    } catch (const RealizeError&) {
      continue;
    }
    if (stats) ++stats->generations;
    std::vector<Analysis> readings = analyze(realized, def);
    if (stats) ++stats->recognitions;
    if (readings.empty()) continue;
    const int dist =
        edit_distance(word, realized, stats ? &stats->edit_ops : nullptr);
    if (dist > threshold) continue;
    for (Analysis& reading : readings)
      emit(out, realized, dist, std::move(reading));
  }
}

}  // namespace

std::vector<Candidate> left_edge_solutions(StrView word, int threshold,
                                           const std::vector<int>& root_ids,
                                           const LanguageDefinition& def,
                                           CorrectionStats* stats) {
  std::map<Str, Candidate> out;
  if (!word.empty() && threshold > 0) {
    for (int id : root_ids) {
      const Root& root = def.roots[id];
      AlignmentResult align = prefix_edit_distance(
          word, root.surface, stats ? &stats->edit_ops : nullptr);
      if (align.pred == threshold)
        splice_root(word, root, align.indexes, threshold, def, out, stats);
    }
  }
  std::vector<Candidate> result;
  result.reserve(out.size());
  for (auto& [key, cand] : out) result.push_back(std::move(cand));
  return result;
}

std::vector<Candidate> generate_candidates(StrView word,
                                           const LanguageDefinition& def,
                                           const QGramIndex& index,
                                           const SearchOptions& options,
                                           CorrectionStats* stats) {
  CorrectionStats local;
  std::map<Str, Candidate> out;
  const int t = options.threshold;
  std::vector<int> pool;
  if (options.use_prefilter) {
    RootQuery query;
    query.k = options.k;
    query.t_q = options.t_q;
    query.t = t;
    pool = prefilter_roots(index, word, query).ones();
  } else {
    pool.reserve(def.roots.size());
    for (const Root& root : def.roots) pool.push_back(root.id);
  }
  std::vector<int> seeds;
  for (int id : pool) {
    const Root& root = def.roots[id];
    AlignmentResult align =
        prefix_edit_distance(word, root.surface, &local.edit_ops);
    const bool soft_final =
        !root.surface.empty() &&
        def.rules.mutable_final_chars.count(root.surface.back()) != 0;
    // A mutated final character costs the match one apparent error, so
    // such roots get one unit of slack here; acceptance stays exact.
    if (align.pred <= t + (soft_final ? 1 : 0)) seeds.push_back(id);
    // Splicing covers roots with no slack left. The root is still searched
    // as well: an error that straddles the root's last character, such as a
    // transposition with the first suffix character, yields a remainder
    // that is not error-free, which only the search can recover.
    if (t > 0 && align.pred == t)
      splice_root(word, root, align.indexes, t, def, out, &local);
  }
  SearchLimits limits;
  limits.threshold = t;
  limits.use_pruning = options.use_pruning;
  limits.max_path =
      2 * (word.size() + static_cast<std::size_t>(std::max(t, 0))) + 16;
  run_search(word, def, seeds, limits, out, &local);
  local.solutions = out.size();
  std::vector<Candidate> result;
  result.reserve(out.size());
  for (auto& [key, cand] : out) result.push_back(std::move(cand));
  if (stats) *stats += local;
  return result;
}

}  // namespace agspell
