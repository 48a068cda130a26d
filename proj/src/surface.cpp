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

#include "agspell/surface.hpp"

namespace agspell {

namespace {

// Index of the first morpheme character that survives boundary deletion when
// the preceding realized character is `prev`. Deleted characters never reach
// the surface, so the context stays `prev` while the scan advances.
std::size_t skip_deletions(StrView morpheme, char32_t prev,
                           const LanguageDefinition& def) {
  std::size_t i = 0;
  while (i < morpheme.size()) {
    bool dropped = false;
    for (const DeletionRule& rule : def.rules.boundary_deletions) {
      if (rule.drop == morpheme[i] && rule.after.matches(prev, def.vowels)) {
        dropped = true;
        break;
      }
    }
    if (!dropped) break;
    ++i;
  }
  return i;
}

// Resolves a metacharacter against the realized text so far: the nearest
// preceding vowel with a known class picks the resolution rule, otherwise the
// metacharacter's default applies.
char32_t resolve_meta(char32_t meta, StrView realized,
                      const LanguageDefinition& def) {
  for (std::size_t i = realized.size(); i-- > 0;) {
    std::optional<int> cls = def.vowels.lookup(realized[i]);
    if (!cls) continue;
    for (const MetaRule& rule : def.rules.meta_resolutions)
      if (rule.meta == meta && rule.vowel_class == *cls)
        return rule.replacement;
    break;
  }
  auto it = def.rules.meta_defaults.find(meta);
  if (it != def.rules.meta_defaults.end()) return it->second;
  throw RealizeError("metacharacter '" + to_utf8(meta) +
                     "' has no applicable resolution");
}

}  // namespace

Str surface_extend(StrView realized_prefix, StrView morpheme,
                   const LanguageDefinition& def) {
  Str result(realized_prefix);
  std::size_t start = 0;
  if (!result.empty()) {
    // The first surviving morpheme character drives a possible mutation of
    // the prefix's final character; deletions are then re-checked against the
    // mutated prefix.
    start = skip_deletions(morpheme, result.back(), def);
    if (start < morpheme.size()) {
      char32_t first = morpheme[start];
      if (def.alphabet.is_meta(first)) first = resolve_meta(first, result, def);
      for (const MutationRule& rule : def.rules.final_mutations) {
        if (rule.from == result.back() &&
            rule.before.matches(first, def.vowels)) {
          result.back() = rule.to;
          break;
        }
      }
      start = skip_deletions(morpheme, result.back(), def);
    }
  }
  for (std::size_t i = start; i < morpheme.size(); ++i) {
    char32_t c = morpheme[i];
    if (def.alphabet.is_meta(c)) c = resolve_meta(c, result, def);
    if (!def.alphabet.is_surface(c))
      throw RealizeError("character '" + to_utf8(c) +
                         "' cannot appear in a surface form");
    result.push_back(c);
  }
  return result;
}

Str surface(StrView lexical, const LanguageDefinition& def) {
  Str result;
  std::size_t start = 0;
  for (;;) {
    std::size_t boundary = lexical.find(def.alphabet.boundary_char, start);
    StrView piece = (boundary == StrView::npos)
                        ? lexical.substr(start)
                        : lexical.substr(start, boundary - start);
    result = surface_extend(result, piece, def);
    if (boundary == StrView::npos) break;
    start = boundary + 1;
  }
  return result;
}

}  // namespace agspell
