#ifndef SLIDER_SPEC_FORMAT_HPP_
#define SLIDER_SPEC_FORMAT_HPP_

// Plain-text key/value format for language specs (and group tables, shared
// by the CLI). See the README for the grammar; parse(print(s)) == s.

#include <string>

#include "slider/group_table.hpp"
#include "slider/language.hpp"

namespace slider {

LanguageSpec parse_language_spec(const std::string& text);
std::string print_language_spec(const LanguageSpec& spec);

LanguageSpec load_language_spec(const std::string& path);

GroupTable parse_group_table(const std::string& text);
std::string print_group_table(const GroupTable& g);

GroupTable load_group_table(const std::string& path);

// Substitution systems for the rauzy subcommand: alphabet, seed, length and
// one rule per symbol.
struct SubstitutionSpec {
  Alphabet alphabet;
  std::vector<Word> rules;  // rules[s] = image of symbol s
  Symbol seed = 0;
  std::size_t length = 0;
};

SubstitutionSpec parse_substitution_spec(const std::string& text);
SubstitutionSpec load_substitution_spec(const std::string& path);

}  // namespace slider

#endif  // SLIDER_SPEC_FORMAT_HPP_
