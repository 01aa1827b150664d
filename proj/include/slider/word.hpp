#ifndef SLIDER_WORD_HPP_
#define SLIDER_WORD_HPP_

// Alphabets, finite words, the cyclic shift, and de Bruijn transitions.
// Every graph constructor in this library speaks this vocabulary.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slider {

using Symbol = std::uint16_t;

// A finite alphabet of m symbols, indexed 0..m-1. Display labels default to
// the decimal indices; custom labels must be pairwise distinct, nonempty,
// and free of whitespace, '.', '|', ',', '>' and '"' (they appear verbatim
// in vertex keys and text files).
struct Alphabet {
  std::vector<std::string> labels;

  Alphabet() = default;
  explicit Alphabet(std::size_t m);
  explicit Alphabet(std::vector<std::string> custom_labels);

  std::size_t size() const { return labels.size(); }
  const std::string& label(Symbol s) const { return labels.at(s); }
  std::optional<Symbol> index_of(std::string_view label) const;

  // True when every label is a single character, in which case word text
  // forms are plain concatenations (no '.' separators).
  bool single_char_labels() const;

  bool operator==(const Alphabet&) const = default;
};

// A word is a sequence of symbol indices together with the alphabet size it
// lives over. Immutable by convention: operations return fresh words.
struct Word {
  std::vector<Symbol> symbols;
  std::uint32_t alphabet_size = 0;

  Word() = default;
  Word(std::vector<Symbol> syms, std::uint32_t m);

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  Symbol operator[](std::size_t i) const { return symbols[i]; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// The arrow src ~> dst of a de Bruijn transition; label is the appended
// letter, so dst = src[1..] + label.
struct Arrow {
  Word src;
  Word dst;
  Symbol label;
};

// Anticlockwise rotation by k: result[i] = w[(i + k) mod n]. k may be
// negative or exceed n; it is reduced mod n.
Word cyclic_shift(const Word& w, long long k);

// All m de Bruijn successors of w (drop the first letter, append each
// letter), in ascending order of the appended letter.
std::vector<Arrow> debruijn_successors(const Word& w);

// Whether w ~> w2 is a de Bruijn transition: w2 agrees with cyclic_shift(w, 1)
// everywhere except possibly the last position. Throws std::invalid_argument
// on length or alphabet mismatch.
bool is_debruijn_transition(const Word& w, const Word& w2);

// Text form of a word: concatenated labels when the alphabet has single
// character labels, otherwise labels joined by ".".
std::string word_text(const Word& w, const Alphabet& a);

// Inverse of word_text for the given alphabet. Throws std::invalid_argument
// on any unknown label.
Word parse_word(std::string_view text, const Alphabet& a);

}  // namespace slider

#endif  // SLIDER_WORD_HPP_
