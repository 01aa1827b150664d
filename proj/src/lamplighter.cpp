#include "slider/lamplighter.hpp"

#include <algorithm>
#include <stdexcept>

namespace slider {

namespace {

void check_element(std::size_t n, const GroupTable& b,
                   const LamplighterElement& g, const char* who) {
  if (g.a >= n || g.phi.size() != n || g.phi.alphabet_size != b.order()) {
    throw std::invalid_argument(std::string(who) +
                                ": element does not live in Z_n wr B");
  }
}

Word delta(std::size_t n, const GroupTable& b, std::size_t position,
           Symbol value) {
  std::vector<Symbol> syms(n, b.identity());
  syms[position % n] = value;
  return Word(std::move(syms), static_cast<std::uint32_t>(b.order()));
}

void check_k(const GroupTable& b, const std::vector<Symbol>& k) {
  if (k.empty()) {
    throw std::invalid_argument("generator family: K may not be empty");
  }
  for (Symbol s : k) {
    if (s >= b.order()) {
      throw std::invalid_argument("generator family: K is not a subset of B");
    }
  }
}

// All |B|^n configurations in symbol-lexicographic order.
std::vector<Word> all_configurations(std::size_t n, const GroupTable& b,
                                     std::size_t cap, const char* who) {
  const std::size_t m = b.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / m) {
      throw std::runtime_error(std::string(who) + ": |B|^n exceeds size cap");
    }
    total *= m;
  }
  std::vector<Word> words;
  words.reserve(total);
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

}  // namespace

LamplighterElement wreath_identity(std::size_t n, const GroupTable& b) {
  if (n == 0) {
    throw std::invalid_argument("wreath: n must be positive");
  }
  return LamplighterElement{
      0, Word(std::vector<Symbol>(n, b.identity()),
              static_cast<std::uint32_t>(b.order()))};
}

LamplighterElement wreath_multiply(std::size_t n, const GroupTable& b,
                                   const LamplighterElement& g1,
                                   const LamplighterElement& g2) {
  check_element(n, b, g1, "wreath_multiply");
  check_element(n, b, g2, "wreath_multiply");
  std::vector<Symbol> phi(n);
  for (std::size_t x = 0; x < n; ++x) {
    // (T^{a1} Phi2)(x) = Phi2(x - a1)
    phi[x] = b.mul(g1.phi.symbols[x],
                   g2.phi.symbols[(x + n - g1.a % n) % n]);
  }
  return LamplighterElement{
      static_cast<std::uint32_t>((g1.a + g2.a) % n),
      Word(std::move(phi), static_cast<std::uint32_t>(b.order()))};
}

LamplighterElement wreath_inverse(std::size_t n, const GroupTable& b,
                                  const LamplighterElement& g) {
  check_element(n, b, g, "wreath_inverse");
  const std::uint32_t a_inv = static_cast<std::uint32_t>((n - g.a % n) % n);
  std::vector<Symbol> phi(n);
  for (std::size_t x = 0; x < n; ++x) {
    // (T^{-a} Phi^{-1})(x) = Phi(x + a)^{-1}
    phi[x] = b.inverse(g.phi.symbols[(x + g.a) % n]);
  }
  return LamplighterElement{
      a_inv, Word(std::move(phi), static_cast<std::uint32_t>(b.order()))};
}

std::vector<Generator> generator_elements(std::size_t n, const GroupTable& b,
                                          const GeneratorFamily& fam) {
  if (n == 0) {
    throw std::invalid_argument("generator_elements: n must be positive");
  }
  check_k(b, fam.k);
  std::vector<Symbol> k = fam.k;
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());

  std::vector<Generator> out;
  const std::uint32_t m = static_cast<std::uint32_t>(b.order());
  const Word empty(std::vector<Symbol>(n, b.identity()), m);
  switch (fam.kind) {
    case GeneratorKind::kStandard:
      out.push_back({LamplighterElement{1 % static_cast<std::uint32_t>(n),
                                        empty},
                     "walk+1"});
      out.push_back({LamplighterElement{
                         static_cast<std::uint32_t>((n - 1) % n), empty},
                     "walk-1"});
      for (Symbol s : k) {
        out.push_back({LamplighterElement{0, delta(n, b, 0, s)},
                       "switch:" + b.alphabet().label(s)});
      }
      break;
    case GeneratorKind::kWalkRightSwitch:
      for (Symbol s : k) {
        out.push_back({LamplighterElement{1 % static_cast<std::uint32_t>(n),
                                          delta(n, b, 1, s)},
                       b.alphabet().label(s)});
      }
      break;
    case GeneratorKind::kSwitchWalkLeft:
      for (Symbol s : k) {
        out.push_back({LamplighterElement{
                           static_cast<std::uint32_t>((n - 1) % n),
                           delta(n, b, 0, s)},
                       b.alphabet().label(s)});
      }
      break;
  }
  return out;
}

std::string element_key(std::size_t n, const GroupTable& b,
                        const LamplighterElement& g) {
  check_element(n, b, g, "element_key");
  return std::to_string(g.a) + "|" + word_text(g.phi, b.alphabet());
}

Digraph lamplighter_cayley_digraph(std::size_t n, const GroupTable& b,
                                   const GeneratorFamily& fam,
                                   std::size_t cap) {
  auto gens = generator_elements(n, b, fam);
  auto configs = all_configurations(n, b, cap / std::max<std::size_t>(n, 1),
                                    "lamplighter_cayley_digraph");
  std::vector<std::string> keys;
  keys.reserve(n * configs.size());
  std::vector<KeyArrow> arrows;
  arrows.reserve(n * configs.size() * gens.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (const Word& phi : configs) {
      LamplighterElement g{a, phi};
      std::string src = element_key(n, b, g);
      keys.push_back(src);
      for (const auto& gen : gens) {
        LamplighterElement h = wreath_multiply(n, b, g, gen.element);
        arrows.push_back(KeyArrow{src, element_key(n, b, h), gen.label});
      }
    }
  }
  return Digraph("lamp_cayley_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

Word coset_projection(std::size_t n, const GroupTable& b,
                      const LamplighterElement& g) {
  check_element(n, b, g, "coset_projection");
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = g.phi.symbols[(g.a + 1 + i) % n];
  }
  return Word(std::move(out), static_cast<std::uint32_t>(b.order()));
}

Word schreier_action(std::size_t n, const GroupTable& b, const Word& w,
                     const LamplighterElement& g) {
  check_element(n, b, g, "schreier_action");
  if (w.size() != n || w.alphabet_size != b.order()) {
    throw std::invalid_argument("schreier_action: word does not live in B^n");
  }
  // result[i] = (w . Phi)(i + a) in word coordinates: the letter at word
  // position p multiplies the lamp at configuration position p + 1.
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = b.mul(w.symbols[(g.a + i) % n],
                   g.phi.symbols[(g.a + 1 + i) % n]);
  }
  return Word(std::move(out), static_cast<std::uint32_t>(b.order()));
}

Digraph lamplighter_schreier_digraph(std::size_t n, const GroupTable& b,
                                     const GeneratorFamily& fam,
                                     std::size_t cap) {
  auto gens = generator_elements(n, b, fam);
  auto configs =
      all_configurations(n, b, cap, "lamplighter_schreier_digraph");
  std::vector<std::string> keys;
  keys.reserve(configs.size());
  std::vector<KeyArrow> arrows;
  arrows.reserve(configs.size() * gens.size());
  for (const Word& w : configs) {
    std::string src = word_text(w, b.alphabet());
    keys.push_back(src);
    for (const auto& gen : gens) {
      Word dst = schreier_action(n, b, w, gen.element);
      arrows.push_back(KeyArrow{src, word_text(dst, b.alphabet()), gen.label});
    }
  }
  return Digraph("lamp_schreier_" + std::to_string(n), std::move(keys),
                 std::move(arrows));
}

}  // namespace slider
