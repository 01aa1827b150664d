#include "slider/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace slider {

namespace {

void check_label(const std::string& label) {
  if (label.empty()) {
    throw std::invalid_argument("alphabet label may not be empty");
  }
  for (char c : label) {
    if (c == '.' || c == '|' || c == ',' || c == '>' || c == '"' ||
        std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("alphabet label '" + label +
                                  "' contains a reserved character");
    }
  }
}

}  // namespace

Alphabet::Alphabet(std::size_t m) {
  if (m < 1) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
  if (m > 65535) {
    throw std::invalid_argument("alphabet size exceeds the symbol range");
  }
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
  }
}

Alphabet::Alphabet(std::vector<std::string> custom_labels)
    : labels(std::move(custom_labels)) {
  if (labels.empty()) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
  if (labels.size() > 65535) {
    throw std::invalid_argument("alphabet size exceeds the symbol range");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    check_label(label);
    if (!seen.insert(label).second) {
      throw std::invalid_argument("alphabet labels must be distinct, got '" +
                                  label + "' twice");
    }
  }
}

std::optional<Symbol> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) {
      return static_cast<Symbol>(i);
    }
  }
  return std::nullopt;
}

bool Alphabet::single_char_labels() const {
  return std::all_of(labels.begin(), labels.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

Word::Word(std::vector<Symbol> syms, std::uint32_t m)
    : symbols(std::move(syms)), alphabet_size(m) {
  if (m == 0) {
    throw std::invalid_argument("word alphabet size must be positive");
  }
  for (Symbol s : symbols) {
    if (s >= m) {
      throw std::invalid_argument("word symbol " + std::to_string(s) +
                                  " out of range for alphabet size " +
                                  std::to_string(m));
    }
  }
}

Word cyclic_shift(const Word& w, long long k) {
  if (w.empty()) {
    throw std::invalid_argument("cyclic_shift of the empty word");
  }
  const long long n = static_cast<long long>(w.size());
  const std::size_t shift = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<Symbol> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w.symbols[(i + shift) % w.size()];
  }
  return Word(std::move(out), w.alphabet_size);
}

std::vector<Arrow> debruijn_successors(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("debruijn_successors of the empty word");
  }
  std::vector<Arrow> arrows;
  arrows.reserve(w.alphabet_size);
  std::vector<Symbol> tail(w.symbols.begin() + 1, w.symbols.end());
  tail.push_back(0);
  for (std::uint32_t beta = 0; beta < w.alphabet_size; ++beta) {
    tail.back() = static_cast<Symbol>(beta);
    arrows.push_back(
        Arrow{w, Word(tail, w.alphabet_size), static_cast<Symbol>(beta)});
  }
  return arrows;
}

bool is_debruijn_transition(const Word& w, const Word& w2) {
  if (w.size() != w2.size() || w.empty()) {
    throw std::invalid_argument("is_debruijn_transition: length mismatch");
  }
  if (w.alphabet_size != w2.alphabet_size) {
    throw std::invalid_argument("is_debruijn_transition: alphabet mismatch");
  }
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w2.symbols[i] != w.symbols[(i + 1) % n]) {
      return false;
    }
  }
  return true;
}

std::string word_text(const Word& w, const Alphabet& a) {
  if (w.alphabet_size != a.size()) {
    throw std::invalid_argument("word_text: word/alphabet size mismatch");
  }
  std::string out;
  const bool plain = a.single_char_labels();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !plain) {
      out += '.';
    }
    out += a.label(w.symbols[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& a) {
  std::vector<Symbol> syms;
  if (text.empty()) {
    return Word({}, static_cast<std::uint32_t>(a.size()));
  }
  if (a.single_char_labels()) {
    for (char c : text) {
      auto idx = a.index_of(std::string_view(&c, 1));
      if (!idx) {
        throw std::invalid_argument(std::string("unknown letter '") + c +
                                    "' in word");
      }
      syms.push_back(*idx);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string_view piece = text.substr(
          pos, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - pos);
      auto idx = a.index_of(piece);
      if (!idx) {
        throw std::invalid_argument("unknown letter '" + std::string(piece) +
                                    "' in word");
      }
      syms.push_back(*idx);
      if (dot == std::string_view::npos) {
        break;
      }
      pos = dot + 1;
    }
  }
  return Word(std::move(syms), static_cast<std::uint32_t>(a.size()));
}

}  // namespace slider
