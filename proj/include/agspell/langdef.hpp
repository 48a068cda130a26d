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
//
// Language definitions: everything the engine knows about one language is
// loaded from a single UTF-8 pack file with these sections, in this order:
//
//   [alphabet]            chars = ..., meta = ..., boundary = +
//   [vowel-classes]       class <name> = <chars>
//   [meta-resolution]     <meta> <class> -> <char>  |  default <meta> -> <char>
//   [roots]               surface<TAB>lexical<TAB>category
//   [states]              <name>  |  <name> final
//   [categories]          <category> -> <state>
//   [transitions]         from<TAB>to<TAB>morpheme
//   [boundary-deletions]  drop <char> after <consonant|vowel|char:<c>>
//   [final-mutations]     <char> -> <char> before <consonant|vowel|char:<c>>
//   [mutable-finals]      chars = ...
//   [special-pairs]       <char> <char>
//   [error-stats]         replacement = ..., deletion = ..., insertion = ...,
//                         transposition = ..., special_replacement_share = ...
//
// Blank lines and lines starting with # are ignored. The start state of the
// morphotactics automaton is implicit: roots label its outgoing transitions
// and each root's category selects the state those transitions enter.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "agspell/text.hpp"

namespace agspell {

struct Alphabet {
  std::vector<char32_t> surface_chars;  // declaration order
  std::set<char32_t> surface_set;
  std::set<char32_t> meta_chars;
  char32_t boundary_char = U'+';

  bool is_surface(char32_t c) const { return surface_set.count(c) != 0; }
  bool is_meta(char32_t c) const { return meta_chars.count(c) != 0; }
  bool operator==(const Alphabet&) const = default;
};

struct VowelClassTable {
  std::vector<std::string> class_names;
  std::map<char32_t, int> class_of;  // vowel -> index into class_names

  std::optional<int> lookup(char32_t c) const;
  bool is_vowel(char32_t c) const { return class_of.count(c) != 0; }
  bool operator==(const VowelClassTable&) const = default;
};

struct Root {
  int id = 0;
  Str surface;  // written form, used for retrieval
  Str lexical;  // underlying form, may contain metacharacters
  std::string category;
  int entry_state = 0;
  bool operator==(const Root&) const = default;
};

struct Transition {
  int from = 0;
  int to = 0;
  Str morpheme;  // lexical form, may contain metacharacters
  bool operator==(const Transition&) const = default;
};

struct MorphotacticsFsa {
  std::vector<std::string> state_names;
  std::set<int> finals;
  std::vector<Transition> transitions;             // declaration order
  std::vector<std::vector<int>> transitions_from;  // state -> transition ids

  int state_id(const std::string& name) const;  // -1 when unknown
  bool is_final(int state) const { return finals.count(state) != 0; }
  bool operator==(const MorphotacticsFsa&) const = default;
};

// Condition on a single surface character.
struct CharCond {
  enum Kind { kVowel, kConsonant, kChar };
  Kind kind = kVowel;
  char32_t ch = 0;

  bool matches(char32_t c, const VowelClassTable& vowels) const;
  bool operator==(const CharCond&) const = default;
};

struct MetaRule {  // <meta> <class> -> <char>
  char32_t meta = 0;
  int vowel_class = 0;
  char32_t replacement = 0;
  bool operator==(const MetaRule&) const = default;
};

struct DeletionRule {  // drop <char> after <cond>
  char32_t drop = 0;
  CharCond after;
  bool operator==(const DeletionRule&) const = default;
};

struct MutationRule {  // <char> -> <char> before <cond>
  char32_t from = 0;
  char32_t to = 0;
  CharCond before;
  bool operator==(const MutationRule&) const = default;
};

struct SurfaceRuleSet {
  std::vector<MetaRule> meta_resolutions;
  std::map<char32_t, char32_t> meta_defaults;
  std::vector<DeletionRule> boundary_deletions;
  std::vector<MutationRule> final_mutations;
  std::set<char32_t> mutable_final_chars;
  bool operator==(const SurfaceRuleSet&) const = default;
};

// Relative error-type frequencies, in percent.
struct ErrorStats {
  double replacement = 0;
  double deletion = 0;
  double insertion = 0;
  double transposition = 0;
  double special_replacement_share = 0;
  bool operator==(const ErrorStats&) const = default;
};

struct LanguageDefinition {
  Alphabet alphabet;
  VowelClassTable vowels;
  std::vector<Root> roots;
  MorphotacticsFsa fsa;
  SurfaceRuleSet rules;
  std::map<std::string, int> categories;  // category -> entry state
  std::set<std::pair<char32_t, char32_t>> special_pairs;  // normalized a < b
  ErrorStats error_stats;

  bool is_special_pair(char32_t a, char32_t b) const;
  bool operator==(const LanguageDefinition&) const = default;
};

class PackError : public std::runtime_error {
 public:
  PackError(int line, const std::string& message);
  explicit PackError(const std::string& message);
  int line() const { return line_; }  // 0 when not tied to a source line

 private:
  int line_ = 0;
};

// Parses and validates a pack. Throws PackError on syntax errors (with the
// offending line number) and on validation diagnostics.
LanguageDefinition load_language(std::istream& source);
LanguageDefinition load_language_file(const std::string& path);

// Structural consistency checks; one human-readable diagnostic per violation.
std::vector<std::string> validate(const LanguageDefinition& def);

// Writes the pack back out in the file format; load_language on the result
// reproduces a structurally identical definition.
void serialize_language(const LanguageDefinition& def, std::ostream& out);

}  // namespace agspell
