#ifndef SLIDER_LANGUAGE_HPP_
#define SLIDER_LANGUAGE_HPP_

// Language and subshift engine: length-n factor enumeration and circularly
// admissible words for finite words, topological Markov chains, subshifts of
// finite type and sofic presentations, plus the spectral bookkeeping
// (irreducibility, aperiodicity, primitivity exponent) the connectivity
// theorem needs.

#include <cstdint>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "slider/word.hpp"

namespace slider {

// Topological Markov chain: admissible ordered letter pairs.
struct TMCSpec {
  Alphabet alphabet;
  std::set<std::pair<Symbol, Symbol>> admissible;

  TMCSpec() = default;
  TMCSpec(Alphabet a, std::set<std::pair<Symbol, Symbol>> pairs);

  bool operator==(const TMCSpec&) const = default;
};

// Subshift of finite type: finitely many forbidden words, each of length at
// least 2 (length-1 exclusions are modelled by shrinking the alphabet).
struct SFTSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;  // sorted, deduplicated, nonempty

  SFTSpec() = default;
  SFTSpec(Alphabet a, std::vector<Word> forbidden_words);

  std::size_t max_forbidden_length() const;

  bool operator==(const SFTSpec&) const = default;
};

struct SoficEdge {
  std::uint32_t from;
  std::uint32_t to;
  Symbol symbol;

  bool operator==(const SoficEdge&) const = default;
  auto operator<=>(const SoficEdge&) const = default;
};

// Sofic presentation: labelled digraph on `states` states. Every state must
// have in- and out-degree at least 1 so that every path extends both ways.
struct SoficSpec {
  Alphabet alphabet;
  std::uint32_t states = 0;
  std::vector<SoficEdge> edges;  // sorted, deduplicated

  SoficSpec() = default;
  SoficSpec(Alphabet a, std::uint32_t state_count, std::vector<SoficEdge> e);

  bool operator==(const SoficSpec&) const = default;
};

// An explicit word set of one common length, accepted verbatim.
// Factor-consistency is the caller's contract.
struct ExplicitSpec {
  Alphabet alphabet;
  std::vector<Word> words;  // sorted, deduplicated, nonempty, one length

  ExplicitSpec() = default;
  ExplicitSpec(Alphabet a, std::vector<Word> word_set);

  std::size_t word_length() const { return words.front().size(); }

  bool operator==(const ExplicitSpec&) const = default;
};

// The language of the factors of a single finite word.
struct FiniteWordSpec {
  Alphabet alphabet;
  Word word;

  FiniteWordSpec() = default;
  FiniteWordSpec(Alphabet a, Word w);

  bool operator==(const FiniteWordSpec&) const = default;
};

using LanguageSpec =
    std::variant<FiniteWordSpec, TMCSpec, SFTSpec, SoficSpec, ExplicitSpec>;

const Alphabet& alphabet_of(const LanguageSpec& spec);

// The set L^(n) of length-n words of the language: contiguous substrings of
// the finite word; words whose consecutive pairs are admissible (TMC); words
// containing no forbidden factor (SFT); label words of length-n presentation
// paths (sofic); the explicit set itself when lengths match (error
// otherwise).
std::set<Word> factors(const LanguageSpec& spec, std::size_t n);

// Words whose n-periodic bi-infinite repetition lies in the subshift. TMC:
// every cyclic pair admissible. SFT: no forbidden word in the cyclic reading
// (requires n >= the longest forbidden word, else std::invalid_argument).
// Sofic: the composed per-letter state relation along w admits a state that
// can return to itself. Only defined for TMC, SFT and sofic specs.
std::set<Word> circular_admissible(const LanguageSpec& spec, std::size_t n);

// Strong connectivity of the transition digraph.
bool irreducible(const TMCSpec& spec);

// True iff irreducible and the gcd of cycle lengths is 1.
bool aperiodic(const TMCSpec& spec);

// Least kappa >= 1 with all entries of the kappa-th boolean power of the
// admissibility matrix positive. Requires a primitive (irreducible and
// aperiodic) chain, else std::invalid_argument naming the failing property.
// Bounded by the Wielandt number m^2 - 2m + 2.
std::size_t primitivity_exponent(const TMCSpec& spec);

// Higher-block recoding of an SFT with longest forbidden word N into a TMC
// over the alphabet of admissible (N-1)-blocks, with the word coding maps
// (lengths n <-> n - N + 2).
struct BlockRecoding {
  TMCSpec tmc;
  std::vector<Word> blocks;  // block symbol -> original (N-1)-word
  Alphabet original_alphabet;
  std::size_t block_length = 0;  // N - 1

  Word encode(const Word& original) const;
  Word decode(const Word& block_word) const;
};

// Throws std::runtime_error("subshift empty") when no block survives.
BlockRecoding sft_to_tmc(const SFTSpec& spec);

// Prefix of the substitution fixed point: iterate symbol -> rules[symbol]
// starting from `seed`, whose rule must start with the seed and have length
// at least 2.
Word substitution_fixed_point(const std::vector<Word>& rules, Symbol seed,
                              std::size_t length);

// The chain with all ordered pairs admissible (full shift).
TMCSpec make_full_tmc(std::size_t m);

// The chain forbidding equal consecutive letters (Kautz graphs).
TMCSpec make_kautz_tmc(std::size_t m);

// The binary chain forbidding the pair 11 (golden mean subshift).
TMCSpec make_golden_mean_tmc();

}  // namespace slider

#endif  // SLIDER_LANGUAGE_HPP_
