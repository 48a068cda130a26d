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

#include "agspell/langdef.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace agspell {

std::optional<int> VowelClassTable::lookup(char32_t c) const {
  auto it = class_of.find(c);
  if (it == class_of.end()) return std::nullopt;
  return it->second;
}

int MorphotacticsFsa::state_id(const std::string& name) const {
  for (std::size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<int>(i);
  return -1;
}

bool CharCond::matches(char32_t c, const VowelClassTable& vowels) const {
  switch (kind) {
    case kVowel:
      return vowels.is_vowel(c);
    case kConsonant:
      return !vowels.is_vowel(c);
    case kChar:
      return c == ch;
  }
  return false;
}

bool LanguageDefinition::is_special_pair(char32_t a, char32_t b) const {
  if (a > b) std::swap(a, b);
  return special_pairs.count({a, b}) != 0;
}

PackError::PackError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

PackError::PackError(const std::string& message)
    : std::runtime_error(message) {}

namespace {

constexpr const char* kSectionOrder[] = {
    "alphabet",      "vowel-classes",      "meta-resolution",
    "roots",         "states",             "categories",
    "transitions",   "boundary-deletions", "final-mutations",
    "mutable-finals", "special-pairs",     "error-stats"};

struct Line {
  int number = 0;
  std::string text;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = s.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      break;
    }
    out.push_back(trim(s.substr(start, tab - start)));
    start = tab + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

char32_t single_char(const std::string& token, int line) {
  Str u = to_u32(token);
  if (u.size() != 1)
    throw PackError(line, "expected a single character, got '" + token + "'");
  return u[0];
}

class Parser {
 public:
  explicit Parser(std::istream& in) {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::string text = trim(raw);
      if (text.empty() || text[0] == '#') continue;
      lines_.push_back({number, raw});
    }
  }

  LanguageDefinition parse() {
    for (const char* section : kSectionOrder) expect_section(section);
    if (pos_ < lines_.size())
      throw PackError(lines_[pos_].number,
                      "unexpected content after the last section");
    resolve_roots();
    build_transition_index();
    std::vector<std::string> problems = validate(def_);
    if (!problems.empty()) {
      std::string joined = "invalid language pack:";
      for (const std::string& p : problems) joined += "\n  " + p;
      throw PackError(joined);
    }
    return std::move(def_);
  }

 private:
  void expect_section(const std::string& name) {
    if (pos_ >= lines_.size())
      throw PackError("missing section [" + name + "]");
    std::string text = trim(lines_[pos_].text);
    if (text != "[" + name + "]")
      throw PackError(lines_[pos_].number,
                      "expected section [" + name + "], got '" + text + "'");
    ++pos_;
    while (pos_ < lines_.size() && trim(lines_[pos_].text)[0] != '[') {
      parse_line(name, lines_[pos_]);
      ++pos_;
    }
  }

  void parse_line(const std::string& section, const Line& line) {
    if (section == "alphabet") return parse_alphabet(line);
    if (section == "vowel-classes") return parse_vowel_class(line);
    if (section == "meta-resolution") return parse_meta_rule(line);
    if (section == "roots") return parse_root(line);
    if (section == "states") return parse_state(line);
    if (section == "categories") return parse_category(line);
    if (section == "transitions") return parse_transition(line);
    if (section == "boundary-deletions") return parse_deletion(line);
    if (section == "final-mutations") return parse_mutation(line);
    if (section == "mutable-finals") return parse_mutable_finals(line);
    if (section == "special-pairs") return parse_special_pair(line);
    if (section == "error-stats") return parse_error_stat(line);
  }

  // Returns {key, value} for a "key = value" line; value may be empty.
  std::pair<std::string, std::string> key_value(const Line& line) {
    std::size_t eq = line.text.find('=');
    if (eq == std::string::npos)
      throw PackError(line.number, "expected 'key = value'");
    return {trim(line.text.substr(0, eq)), trim(line.text.substr(eq + 1))};
  }

  CharCond parse_cond(const std::string& token, int number) {
    CharCond cond;
    if (token == "vowel") {
      cond.kind = CharCond::kVowel;
    } else if (token == "consonant") {
      cond.kind = CharCond::kConsonant;
    } else if (token.rfind("char:", 0) == 0) {
      cond.kind = CharCond::kChar;
      cond.ch = single_char(token.substr(5), number);
    } else {
      throw PackError(number, "unknown condition '" + token +
                                  "' (expected vowel, consonant or char:<c>)");
    }
    return cond;
  }

  void parse_alphabet(const Line& line) {
    auto [key, value] = key_value(line);
    if (key == "chars") {
      for (char32_t c : to_u32(value)) {
        if (def_.alphabet.surface_set.insert(c).second)
          def_.alphabet.surface_chars.push_back(c);
      }
    } else if (key == "meta") {
      for (char32_t c : to_u32(value)) def_.alphabet.meta_chars.insert(c);
    } else if (key == "boundary") {
      def_.alphabet.boundary_char = single_char(value, line.number);
    } else {
      throw PackError(line.number, "unknown alphabet key '" + key + "'");
    }
  }

  void parse_vowel_class(const Line& line) {
    auto [key, value] = key_value(line);
    std::vector<std::string> head = split_ws(key);
    if (head.size() != 2 || head[0] != "class")
      throw PackError(line.number, "expected 'class <name> = <chars>'");
    const std::string& name = head[1];
    for (const std::string& existing : def_.vowels.class_names)
      if (existing == name)
        throw PackError(line.number, "duplicate vowel class '" + name + "'");
    int id = static_cast<int>(def_.vowels.class_names.size());
    def_.vowels.class_names.push_back(name);
    for (char32_t c : to_u32(value)) {
      if (!def_.vowels.class_of.emplace(c, id).second)
        throw PackError(line.number, "vowel '" + to_utf8(c) +
                                         "' assigned to two classes");
    }
  }

  void parse_meta_rule(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.size() == 4 && tok[0] == "default" && tok[2] == "->") {
      char32_t meta = single_char(tok[1], line.number);
      def_.rules.meta_defaults[meta] = single_char(tok[3], line.number);
      return;
    }
    if (tok.size() == 4 && tok[2] == "->") {
      MetaRule rule;
      rule.meta = single_char(tok[0], line.number);
      int cls = -1;
      for (std::size_t i = 0; i < def_.vowels.class_names.size(); ++i)
        if (def_.vowels.class_names[i] == tok[1]) cls = static_cast<int>(i);
      if (cls < 0)
        throw PackError(line.number, "unknown vowel class '" + tok[1] + "'");
      rule.vowel_class = cls;
      rule.replacement = single_char(tok[3], line.number);
      def_.rules.meta_resolutions.push_back(rule);
      return;
    }
    throw PackError(line.number,
                    "expected '<meta> <class> -> <char>' or "
                    "'default <meta> -> <char>'");
  }

  void parse_root(const Line& line) {
    std::vector<std::string> fields = split_tabs(line.text);
    if (fields.size() != 3)
      throw PackError(line.number,
                      "expected 'surface<TAB>lexical<TAB>category'");
    raw_roots_.push_back({fields[0], fields[1], fields[2], line.number});
  }

  void parse_state(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.empty() || tok.size() > 2 || (tok.size() == 2 && tok[1] != "final"))
      throw PackError(line.number, "expected '<state>' or '<state> final'");
    if (def_.fsa.state_id(tok[0]) >= 0)
      throw PackError(line.number, "duplicate state '" + tok[0] + "'");
    def_.fsa.state_names.push_back(tok[0]);
    if (tok.size() == 2)
      def_.fsa.finals.insert(static_cast<int>(def_.fsa.state_names.size()) - 1);
  }

  void parse_category(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.size() != 3 || tok[1] != "->")
      throw PackError(line.number, "expected '<category> -> <state>'");
    int state = def_.fsa.state_id(tok[2]);
    if (state < 0)
      throw PackError(line.number, "unknown state '" + tok[2] + "'");
    if (!def_.categories.emplace(tok[0], state).second)
      throw PackError(line.number, "duplicate category '" + tok[0] + "'");
  }

  void parse_transition(const Line& line) {
    std::vector<std::string> fields = split_tabs(line.text);
    if (fields.size() != 3)
      throw PackError(line.number, "expected 'from<TAB>to<TAB>morpheme'");
    Transition tr;
    tr.from = def_.fsa.state_id(fields[0]);
    if (tr.from < 0)
      throw PackError(line.number, "unknown state '" + fields[0] + "'");
    tr.to = def_.fsa.state_id(fields[1]);
    if (tr.to < 0)
      throw PackError(line.number, "unknown state '" + fields[1] + "'");
    tr.morpheme = to_u32(fields[2]);
    def_.fsa.transitions.push_back(std::move(tr));
  }

  void parse_deletion(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.size() != 4 || tok[0] != "drop" || tok[2] != "after")
      throw PackError(line.number, "expected 'drop <char> after <cond>'");
    DeletionRule rule;
    rule.drop = single_char(tok[1], line.number);
    rule.after = parse_cond(tok[3], line.number);
    def_.rules.boundary_deletions.push_back(rule);
  }

  void parse_mutation(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.size() != 5 || tok[1] != "->" || tok[3] != "before")
      throw PackError(line.number,
                      "expected '<char> -> <char> before <cond>'");
    MutationRule rule;
    rule.from = single_char(tok[0], line.number);
    rule.to = single_char(tok[2], line.number);
    rule.before = parse_cond(tok[4], line.number);
    def_.rules.final_mutations.push_back(rule);
  }

  void parse_mutable_finals(const Line& line) {
    auto [key, value] = key_value(line);
    if (key != "chars")
      throw PackError(line.number, "expected 'chars = <chars>'");
    for (char32_t c : to_u32(value)) def_.rules.mutable_final_chars.insert(c);
  }

  void parse_special_pair(const Line& line) {
    std::vector<std::string> tok = split_ws(line.text);
    if (tok.size() != 2)
      throw PackError(line.number, "expected '<char> <char>'");
    char32_t a = single_char(tok[0], line.number);
    char32_t b = single_char(tok[1], line.number);
    if (a > b) std::swap(a, b);
    def_.special_pairs.insert({a, b});
  }

  void parse_error_stat(const Line& line) {
    auto [key, value] = key_value(line);
    double parsed = 0;
    try {
      parsed = std::stod(value);
    } catch (const std::exception&) {
      throw PackError(line.number, "expected a number, got '" + value + "'");
    }
    if (key == "replacement")
      def_.error_stats.replacement = parsed;
    else if (key == "deletion")
      def_.error_stats.deletion = parsed;
    else if (key == "insertion")
      def_.error_stats.insertion = parsed;
    else if (key == "transposition")
      def_.error_stats.transposition = parsed;
    else if (key == "special_replacement_share")
      def_.error_stats.special_replacement_share = parsed;
    else
      throw PackError(line.number, "unknown error-stats key '" + key + "'");
  }

  void resolve_roots() {
    for (const RawRoot& raw : raw_roots_) {
      Root root;
      root.id = static_cast<int>(def_.roots.size());
      root.surface = to_u32(raw.surface);
      root.lexical = to_u32(raw.lexical);
      root.category = raw.category;
      auto it = def_.categories.find(raw.category);
      if (it == def_.categories.end())
        throw PackError(raw.line, "root '" + raw.surface +
                                      "' has unknown category '" +
                                      raw.category + "'");
      root.entry_state = it->second;
      def_.roots.push_back(std::move(root));
    }
  }

  void build_transition_index() {
    def_.fsa.transitions_from.assign(def_.fsa.state_names.size(), {});
    for (std::size_t i = 0; i < def_.fsa.transitions.size(); ++i)
      def_.fsa.transitions_from[def_.fsa.transitions[i].from].push_back(
          static_cast<int>(i));
  }

  struct RawRoot {
    std::string surface, lexical, category;
    int line = 0;
  };

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  LanguageDefinition def_;
  std::vector<RawRoot> raw_roots_;
};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

LanguageDefinition load_language(std::istream& source) {
  Parser parser(source);
  return parser.parse();
}

LanguageDefinition load_language_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PackError("cannot open language pack '" + path + "'");
  return load_language(in);
}

std::vector<std::string> validate(const LanguageDefinition& def) {
  std::vector<std::string> out;
  const Alphabet& alpha = def.alphabet;
  auto chr = [](char32_t c) { return to_utf8(c); };
  auto in_lexicon_charset = [&](char32_t c) {
    return alpha.is_surface(c) || alpha.is_meta(c);
  };

  for (char32_t m : alpha.meta_chars)
    if (alpha.is_surface(m))
      out.push_back("metacharacter '" + chr(m) +
                    "' is also declared as a surface character");
  if (alpha.is_surface(alpha.boundary_char) ||
      alpha.is_meta(alpha.boundary_char))
    out.push_back("boundary character '" + chr(alpha.boundary_char) +
                  "' collides with the alphabet");

  for (const auto& [c, cls] : def.vowels.class_of)
    if (!alpha.is_surface(c))
      out.push_back("vowel '" + chr(c) + "' of class '" +
                    def.vowels.class_names[cls] +
                    "' is not a surface character");

  for (char32_t m : alpha.meta_chars) {
    if (def.rules.meta_defaults.count(m) != 0) continue;
    if (def.vowels.class_names.empty()) {
      out.push_back("metacharacter '" + chr(m) +
                    "' has no resolution rule and no default");
      continue;
    }
    // Without a default, realization fails the moment the nearest vowel
    // falls in a class the meta has no rule for, so demand full coverage.
    for (std::size_t cls = 0; cls < def.vowels.class_names.size(); ++cls) {
      bool covered = false;
      for (const MetaRule& rule : def.rules.meta_resolutions)
        if (rule.meta == m && rule.vowel_class == static_cast<int>(cls))
          covered = true;
      if (!covered)
        out.push_back("metacharacter '" + chr(m) + "' has no rule for class '" +
                      def.vowels.class_names[cls] + "' and no default");
    }
  }
  for (const MetaRule& rule : def.rules.meta_resolutions) {
    if (!alpha.is_meta(rule.meta))
      out.push_back("resolution rule for undeclared metacharacter '" +
                    chr(rule.meta) + "'");
    if (rule.vowel_class < 0 ||
        static_cast<std::size_t>(rule.vowel_class) >=
            def.vowels.class_names.size())
      out.push_back("resolution rule for '" + chr(rule.meta) +
                    "' names an unknown vowel class");
    if (!alpha.is_surface(rule.replacement))
      out.push_back("resolution of '" + chr(rule.meta) +
                    "' produces non-surface character '" +
                    chr(rule.replacement) + "'");
  }
  for (const auto& [m, c] : def.rules.meta_defaults) {
    if (!alpha.is_meta(m))
      out.push_back("default for undeclared metacharacter '" + chr(m) + "'");
    if (!alpha.is_surface(c))
      out.push_back("default of '" + chr(m) +
                    "' produces non-surface character '" + chr(c) + "'");
  }

  const std::size_t state_count = def.fsa.state_names.size();
  std::set<std::pair<Str, std::string>> root_keys;
  for (std::size_t i = 0; i < def.roots.size(); ++i) {
    const Root& r = def.roots[i];
    const std::string tag =
        "root " + std::to_string(i) + " ('" + to_utf8(r.surface) + "')";
    if (r.id != static_cast<int>(i))
      out.push_back(tag + ": id " + std::to_string(r.id) +
                    " breaks the dense 0..n-1 numbering");
    if (r.surface.empty()) out.push_back(tag + ": empty surface form");
    for (char32_t c : r.surface)
      if (!alpha.is_surface(c))
        out.push_back(tag + ": surface character '" + chr(c) +
                      "' not in the alphabet");
    if (r.lexical.empty()) out.push_back(tag + ": empty lexical form");
    for (char32_t c : r.lexical)
      if (!in_lexicon_charset(c))
        out.push_back(tag + ": lexical character '" + chr(c) +
                      "' not in the alphabet");
    if (r.entry_state < 0 ||
        static_cast<std::size_t>(r.entry_state) >= state_count)
      out.push_back(tag + ": entry state out of range");
    if (!root_keys.insert({r.surface, r.category}).second)
      out.push_back(tag + ": duplicate surface/category pair");
  }

  for (int f : def.fsa.finals)
    if (f < 0 || static_cast<std::size_t>(f) >= state_count)
      out.push_back("final state id " + std::to_string(f) + " out of range");
  for (std::size_t i = 0; i < def.fsa.transitions.size(); ++i) {
    const Transition& tr = def.fsa.transitions[i];
    const std::string tag = "transition " + std::to_string(i);
    if (tr.from < 0 || static_cast<std::size_t>(tr.from) >= state_count)
      out.push_back(tag + ": source state out of range");
    if (tr.to < 0 || static_cast<std::size_t>(tr.to) >= state_count)
      out.push_back(tag + ": target state out of range");
    if (tr.morpheme.empty()) out.push_back(tag + ": empty morpheme");
    for (char32_t c : tr.morpheme)
      if (!in_lexicon_charset(c))
        out.push_back(tag + ": morpheme character '" + chr(c) +
                      "' not in the alphabet");
  }
  if (def.fsa.transitions_from.size() != state_count)
    out.push_back("transition index does not cover every state");

  for (const auto& [name, state] : def.categories)
    if (state < 0 || static_cast<std::size_t>(state) >= state_count)
      out.push_back("category '" + name + "' maps to an unknown state");

  for (const DeletionRule& rule : def.rules.boundary_deletions) {
    if (!in_lexicon_charset(rule.drop))
      out.push_back("deletion rule drops unknown character '" +
                    chr(rule.drop) + "'");
    if (rule.after.kind == CharCond::kChar && !alpha.is_surface(rule.after.ch))
      out.push_back("deletion rule conditions on non-surface character '" +
                    chr(rule.after.ch) + "'");
  }
  for (const MutationRule& rule : def.rules.final_mutations) {
    if (!alpha.is_surface(rule.from) || !alpha.is_surface(rule.to))
      out.push_back("mutation rule '" + chr(rule.from) + " -> " +
                    chr(rule.to) + "' uses non-surface characters");
    if (rule.before.kind == CharCond::kChar &&
        !alpha.is_surface(rule.before.ch))
      out.push_back("mutation rule conditions on non-surface character '" +
                    chr(rule.before.ch) + "'");
  }
  for (char32_t c : def.rules.mutable_final_chars)
    if (!alpha.is_surface(c))
      out.push_back("mutable final '" + chr(c) +
                    "' is not a surface character");

  for (const auto& [a, b] : def.special_pairs) {
    if (a == b)
      out.push_back("special pair '" + chr(a) + " " + chr(b) +
                    "' pairs a character with itself");
    if (!alpha.is_surface(a) || !alpha.is_surface(b))
      out.push_back("special pair '" + chr(a) + " " + chr(b) +
                    "' uses non-surface characters");
  }

  const ErrorStats& st = def.error_stats;
  if (st.replacement < 0) out.push_back("negative replacement frequency");
  if (st.deletion < 0) out.push_back("negative deletion frequency");
  if (st.insertion < 0) out.push_back("negative insertion frequency");
  if (st.transposition < 0) out.push_back("negative transposition frequency");
  if (st.special_replacement_share < 0)
    out.push_back("negative special replacement share");

  return out;
}

namespace {

std::string cond_text(const CharCond& cond) {
  switch (cond.kind) {
    case CharCond::kVowel:
      return "vowel";
    case CharCond::kConsonant:
      return "consonant";
    case CharCond::kChar:
      return "char:" + to_utf8(cond.ch);
  }
  return "vowel";
}

}  // namespace

void serialize_language(const LanguageDefinition& def, std::ostream& out) {
  const MorphotacticsFsa& fsa = def.fsa;

  out << "[alphabet]\n";
  out << "chars = "
      << to_utf8(Str(def.alphabet.surface_chars.begin(),
                     def.alphabet.surface_chars.end()))
      << "\n";
  out << "meta = ";
  for (char32_t c : def.alphabet.meta_chars) out << to_utf8(c);
  out << "\n";
  out << "boundary = " << to_utf8(def.alphabet.boundary_char) << "\n";

  out << "\n[vowel-classes]\n";
  for (std::size_t cls = 0; cls < def.vowels.class_names.size(); ++cls) {
    out << "class " << def.vowels.class_names[cls] << " = ";
    for (const auto& [c, id] : def.vowels.class_of)
      if (id == static_cast<int>(cls)) out << to_utf8(c);
    out << "\n";
  }

  out << "\n[meta-resolution]\n";
  for (const MetaRule& rule : def.rules.meta_resolutions)
    out << to_utf8(rule.meta) << " " << def.vowels.class_names[rule.vowel_class]
        << " -> " << to_utf8(rule.replacement) << "\n";
  for (const auto& [m, c] : def.rules.meta_defaults)
    out << "default " << to_utf8(m) << " -> " << to_utf8(c) << "\n";

  out << "\n[roots]\n";
  for (const Root& r : def.roots)
    out << to_utf8(r.surface) << "\t" << to_utf8(r.lexical) << "\t"
        << r.category << "\n";

  out << "\n[states]\n";
  for (std::size_t i = 0; i < fsa.state_names.size(); ++i) {
    out << fsa.state_names[i];
    if (fsa.is_final(static_cast<int>(i))) out << " final";
    out << "\n";
  }

  out << "\n[categories]\n";
  for (const auto& [name, state] : def.categories)
    out << name << " -> " << fsa.state_names[state] << "\n";

  out << "\n[transitions]\n";
  for (const Transition& tr : fsa.transitions)
    out << fsa.state_names[tr.from] << "\t" << fsa.state_names[tr.to] << "\t"
        << to_utf8(tr.morpheme) << "\n";

  out << "\n[boundary-deletions]\n";
  for (const DeletionRule& rule : def.rules.boundary_deletions)
    out << "drop " << to_utf8(rule.drop) << " after " << cond_text(rule.after)
        << "\n";

  out << "\n[final-mutations]\n";
  for (const MutationRule& rule : def.rules.final_mutations)
    out << to_utf8(rule.from) << " -> " << to_utf8(rule.to) << " before "
        << cond_text(rule.before) << "\n";

  out << "\n[mutable-finals]\n";
  out << "chars = ";
  for (char32_t c : def.rules.mutable_final_chars) out << to_utf8(c);
  out << "\n";

  out << "\n[special-pairs]\n";
  for (const auto& [a, b] : def.special_pairs)
    out << to_utf8(a) << " " << to_utf8(b) << "\n";

  out << "\n[error-stats]\n";
  out << "replacement = " << format_double(def.error_stats.replacement)
      << "\n";
  out << "deletion = " << format_double(def.error_stats.deletion) << "\n";
  out << "insertion = " << format_double(def.error_stats.insertion) << "\n";
  out << "transposition = " << format_double(def.error_stats.transposition)
      << "\n";
  out << "special_replacement_share = "
      << format_double(def.error_stats.special_replacement_share) << "\n";
}

}  // namespace agspell
