#include "slider/slider_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace slider {

namespace {

// m^power, throwing when the result would exceed cap.
std::size_t checked_pow(std::size_t m, std::size_t power, std::size_t cap,
                        const char* who) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < power; ++i) {
    if (m != 0 && total > cap / m) {
      throw std::runtime_error(std::string(who) + ": size cap exceeded");
    }
    total *= m;
  }
  return total;
}

// All m^n words in symbol-lexicographic order.
std::vector<Word> all_words(std::size_t m, std::size_t n) {
  std::vector<Word> words;
  std::vector<Symbol> cur(n, 0);
  while (true) {
    words.push_back(Word(cur, static_cast<std::uint32_t>(m)));
    std::size_t i = n;
    while (i > 0 && cur[i - 1] + 1u == m) {
      cur[--i] = 0;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return words;
}

Word shifted_with(const Word& w, Symbol letter) {
  std::vector<Symbol> syms(w.symbols.begin() + 1, w.symbols.end());
  syms.push_back(letter);
  return Word(std::move(syms), w.alphabet_size);
}

}  // namespace

Digraph full_debruijn(const Alphabet& a, std::size_t n, std::size_t cap) {
  if (n < 1) {
    throw std::invalid_argument("full_debruijn: span must be positive");
  }
  const std::size_t m = a.size();
  checked_pow(m, n + 1, cap, "full_debruijn");
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (const Word& w : all_words(m, n)) {
    std::string src = word_text(w, a);
    keys.push_back(src);
    for (Symbol beta = 0; beta < m; ++beta) {
      arrows.push_back(KeyArrow{src, word_text(shifted_with(w, beta), a),
                                a.label(beta)});
    }
  }
  return Digraph("debruijn_" + std::to_string(m) + "_" + std::to_string(n),
                 std::move(keys), std::move(arrows));
}

Digraph full_debruijn(std::size_t m, std::size_t n, std::size_t cap) {
  return full_debruijn(Alphabet(m), n, cap);
}

Digraph induced_slider(const std::set<Word>& vertices, const Alphabet& a) {
  if (vertices.empty()) {
    throw std::invalid_argument("induced_slider: empty vertex set");
  }
  const std::size_t n = vertices.begin()->size();
  if (n == 0) {
    throw std::invalid_argument("induced_slider: words must be nonempty");
  }
  for (const Word& w : vertices) {
    if (w.size() != n) {
      throw std::invalid_argument(
          "induced_slider: vertex words must share one length");
    }
    if (w.alphabet_size != a.size()) {
      throw std::invalid_argument("induced_slider: word alphabet mismatch");
    }
  }
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (const Word& w : vertices) {
    std::string src = word_text(w, a);
    keys.push_back(src);
    for (Symbol beta = 0; beta < a.size(); ++beta) {
      Word dst = shifted_with(w, beta);
      if (vertices.count(dst)) {
        arrows.push_back(KeyArrow{src, word_text(dst, a), a.label(beta)});
      }
    }
  }
  return Digraph("induced_slider", std::move(keys), std::move(arrows));
}

Digraph factorial_slider(const LanguageSpec& spec, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("factorial_slider: span must be positive");
  }
  const Alphabet& a = alphabet_of(spec);
  std::set<Word> vertex_words;
  std::set<Word> edge_words;
  if (const auto* ex = std::get_if<ExplicitSpec>(&spec)) {
    if (ex->word_length() != n + 1) {
      throw std::invalid_argument(
          "factorial_slider: an explicit spec supplies the arrow words and "
          "must have length n+1");
    }
    edge_words = factors(spec, n + 1);
  } else {
    vertex_words = factors(spec, n);
    edge_words = factors(spec, n + 1);
  }
  for (const Word& e : edge_words) {
    vertex_words.insert(Word(
        std::vector<Symbol>(e.symbols.begin(), e.symbols.end() - 1),
        e.alphabet_size));
    vertex_words.insert(Word(
        std::vector<Symbol>(e.symbols.begin() + 1, e.symbols.end()),
        e.alphabet_size));
  }
  if (vertex_words.empty()) {
    throw std::runtime_error("factorial_slider: empty factor set");
  }
  std::vector<std::string> keys;
  keys.reserve(vertex_words.size());
  for (const Word& w : vertex_words) {
    keys.push_back(word_text(w, a));
  }
  std::vector<KeyArrow> arrows;
  arrows.reserve(edge_words.size());
  for (const Word& e : edge_words) {
    arrows.push_back(KeyArrow{
        word_text(Word(std::vector<Symbol>(e.symbols.begin(),
                                           e.symbols.end() - 1),
                       e.alphabet_size),
                  a),
        word_text(Word(std::vector<Symbol>(e.symbols.begin() + 1,
                                           e.symbols.end()),
                       e.alphabet_size),
                  a),
        a.label(e.symbols.back())});
  }
  return Digraph("factorial_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

Digraph periodic_slider(const LanguageSpec& spec, std::size_t n) {
  std::set<Word> circ = circular_admissible(spec, n);
  if (circ.empty()) {
    throw std::runtime_error(
        "periodic_slider: no circularly admissible words at this span");
  }
  Digraph g = induced_slider(circ, alphabet_of(spec));
  g.set_name("periodic_" + std::to_string(n));
  return g;
}

Digraph trans_markov_slider(const TMCSpec& sigma, std::size_t n,
                            const std::set<Word>* restrict_to,
                            std::size_t cap) {
  if (n < 1) {
    throw std::invalid_argument("trans_markov_slider: span must be positive");
  }
  const Alphabet& a = sigma.alphabet;
  const std::size_t m = a.size();
  std::vector<Word> verts;
  if (restrict_to != nullptr) {
    for (const Word& w : *restrict_to) {
      if (w.size() != n || w.alphabet_size != m) {
        throw std::invalid_argument(
            "trans_markov_slider: restricted vertex words must have span n "
            "over the chain's alphabet");
      }
      verts.push_back(w);
    }
    if (verts.empty()) {
      throw std::invalid_argument("trans_markov_slider: empty restriction");
    }
  } else {
    checked_pow(m, n + 1, cap, "trans_markov_slider");
    verts = all_words(m, n);
  }
  auto in_vertex_set = [&](const Word& w) {
    return restrict_to == nullptr || restrict_to->count(w) > 0;
  };
  std::vector<std::string> keys;
  keys.reserve(verts.size());
  std::vector<KeyArrow> arrows;
  for (const Word& w : verts) {
    std::string src = word_text(w, a);
    keys.push_back(src);
    for (Symbol beta = 0; beta < m; ++beta) {
      if (!sigma.admissible.count({w.symbols[0], beta})) continue;
      Word dst = shifted_with(w, beta);
      if (in_vertex_set(dst)) {
        arrows.push_back(KeyArrow{src, word_text(dst, a), a.label(beta)});
      }
    }
  }
  return Digraph("transmarkov_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

Digraph cayley_slider(const GroupTable& g, const std::vector<Symbol>& k,
                      std::size_t n, std::size_t cap) {
  if (n < 1) {
    throw std::invalid_argument("cayley_slider: span must be positive");
  }
  if (k.empty()) {
    throw std::invalid_argument("cayley_slider: K may not be empty");
  }
  std::vector<Symbol> ks = k;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (Symbol h : ks) {
    if (h >= g.order()) {
      throw std::invalid_argument("cayley_slider: K is not a subset of G");
    }
  }
  const std::size_t m = g.order();
  checked_pow(m, n, cap / std::max<std::size_t>(ks.size(), 1),
              "cayley_slider");
  const Alphabet& a = g.alphabet();
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (const Word& w : all_words(m, n)) {
    std::string src = word_text(w, a);
    keys.push_back(src);
    for (Symbol h : ks) {
      Word dst = shifted_with(w, g.mul(w.symbols[0], h));
      arrows.push_back(KeyArrow{src, word_text(dst, a), a.label(h)});
    }
  }
  return Digraph("cayley_slider_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

Digraph schreier_slider(const Alphabet& points,
                        const std::vector<std::vector<Symbol>>& moves,
                        const std::vector<std::string>& k_labels,
                        std::size_t n, std::size_t cap) {
  if (n < 1) {
    throw std::invalid_argument("schreier_slider: span must be positive");
  }
  if (moves.empty() || moves.size() != k_labels.size()) {
    throw std::invalid_argument(
        "schreier_slider: need one move table per generator label");
  }
  const std::size_t m = points.size();
  for (const auto& table : moves) {
    if (table.size() != m) {
      throw std::invalid_argument(
          "schreier_slider: move table size differs from the point count");
    }
    for (Symbol t : table) {
      if (t >= m) {
        throw std::invalid_argument("schreier_slider: move target out of "
                                    "range");
      }
    }
  }
  checked_pow(m, n, cap / std::max<std::size_t>(moves.size(), 1),
              "schreier_slider");
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (const Word& w : all_words(m, n)) {
    std::string src = word_text(w, points);
    keys.push_back(src);
    for (std::size_t j = 0; j < moves.size(); ++j) {
      Word dst = shifted_with(w, moves[j][w.symbols[0]]);
      arrows.push_back(KeyArrow{src, word_text(dst, points), k_labels[j]});
    }
  }
  return Digraph("schreier_slider_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

PartitionSystem::PartitionSystem(Alphabet a, std::vector<std::size_t> t,
                                 std::vector<Symbol> cells)
    : alphabet(std::move(a)), next(std::move(t)), cell(std::move(cells)) {
  if (next.empty() || next.size() != cell.size()) {
    throw std::invalid_argument(
        "partition system: need a transform target and a cell per point");
  }
  for (std::size_t target : next) {
    if (target >= next.size()) {
      throw std::invalid_argument("partition system: transform leaves the "
                                  "point set");
    }
  }
  for (Symbol c : cell) {
    if (c >= alphabet.size()) {
      throw std::invalid_argument("partition system: cell out of range");
    }
  }
}

Digraph partition_slider(const PartitionSystem& sys, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("partition_slider: span must be positive");
  }
  // One alpha_{n+1}-name per point; the distinct names are the arrows.
  std::set<Word> names;
  std::vector<Symbol> buffer(n + 1);
  for (std::size_t x = 0; x < sys.points(); ++x) {
    std::size_t p = x;
    for (std::size_t i = 0; i <= n; ++i) {
      buffer[i] = sys.cell[p];
      p = sys.next[p];
    }
    names.insert(Word(buffer, static_cast<std::uint32_t>(sys.alphabet.size())));
  }
  std::set<Word> vertex_words;
  std::vector<KeyArrow> arrows;
  arrows.reserve(names.size());
  for (const Word& name : names) {
    Word src(std::vector<Symbol>(name.symbols.begin(), name.symbols.end() - 1),
             name.alphabet_size);
    Word dst(std::vector<Symbol>(name.symbols.begin() + 1, name.symbols.end()),
             name.alphabet_size);
    vertex_words.insert(src);
    vertex_words.insert(dst);
    arrows.push_back(KeyArrow{word_text(src, sys.alphabet),
                              word_text(dst, sys.alphabet),
                              sys.alphabet.label(name.symbols.back())});
  }
  std::vector<std::string> keys;
  keys.reserve(vertex_words.size());
  for (const Word& w : vertex_words) {
    keys.push_back(word_text(w, sys.alphabet));
  }
  return Digraph("partition_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

Digraph collatz_slider(std::size_t n) {
  if (n < 1 || n > 20) {
    throw std::invalid_argument("collatz_slider: n must be between 1 and 20");
  }
  const std::size_t modulus = std::size_t(1) << (n + 1);
  std::vector<std::size_t> next(modulus);
  std::vector<Symbol> cell(modulus);
  for (std::size_t x = 0; x < modulus; ++x) {
    next[x] = (x % 2 == 0) ? x / 2 : ((3 * x + 1) / 2) % modulus;
    cell[x] = static_cast<Symbol>(x % 2);
  }
  PartitionSystem sys(Alphabet(2), std::move(next), std::move(cell));
  Digraph g = partition_slider(sys, n);
  g.set_name("collatz_" + std::to_string(n));
  return g;
}

}  // namespace slider
