#include "slider/language.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace slider {

TMCSpec::TMCSpec(Alphabet a, std::set<std::pair<Symbol, Symbol>> pairs)
    : alphabet(std::move(a)), admissible(std::move(pairs)) {
  for (const auto& [u, v] : admissible) {
    if (u >= alphabet.size() || v >= alphabet.size()) {
      throw std::invalid_argument("tmc: admissible pair out of alphabet range");
    }
  }
}

SFTSpec::SFTSpec(Alphabet a, std::vector<Word> forbidden_words)
    : alphabet(std::move(a)), forbidden(std::move(forbidden_words)) {
  if (forbidden.empty()) {
    throw std::invalid_argument("sft: forbidden word set may not be empty");
  }
  for (const auto& w : forbidden) {
    if (w.size() < 2) {
      throw std::invalid_argument(
          "sft: forbidden words must have length at least 2 (drop letters "
          "from the alphabet instead)");
    }
    if (w.alphabet_size != alphabet.size()) {
      throw std::invalid_argument("sft: forbidden word alphabet mismatch");
    }
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
}

std::size_t SFTSpec::max_forbidden_length() const {
  std::size_t n = 0;
  for (const auto& w : forbidden) {
    n = std::max(n, w.size());
  }
  return n;
}

SoficSpec::SoficSpec(Alphabet a, std::uint32_t state_count,
                     std::vector<SoficEdge> e)
    : alphabet(std::move(a)), states(state_count), edges(std::move(e)) {
  if (states == 0) {
    throw std::invalid_argument("sofic: need at least one state");
  }
  std::vector<bool> has_out(states, false), has_in(states, false);
  for (const auto& edge : edges) {
    if (edge.from >= states || edge.to >= states) {
      throw std::invalid_argument("sofic: edge state out of range");
    }
    if (edge.symbol >= alphabet.size()) {
      throw std::invalid_argument("sofic: edge symbol out of range");
    }
    has_out[edge.from] = true;
    has_in[edge.to] = true;
  }
  for (std::uint32_t s = 0; s < states; ++s) {
    if (!has_out[s] || !has_in[s]) {
      throw std::invalid_argument(
          "sofic: state " + std::to_string(s) +
          " is a sink or source; every state needs in- and out-edges");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

ExplicitSpec::ExplicitSpec(Alphabet a, std::vector<Word> word_set)
    : alphabet(std::move(a)), words(std::move(word_set)) {
  if (words.empty()) {
    throw std::invalid_argument("explicit: word set may not be empty");
  }
  const std::size_t len = words.front().size();
  if (len == 0) {
    throw std::invalid_argument("explicit: words must be nonempty");
  }
  for (const auto& w : words) {
    if (w.size() != len) {
      throw std::invalid_argument("explicit: words must share one length");
    }
    if (w.alphabet_size != alphabet.size()) {
      throw std::invalid_argument("explicit: word alphabet mismatch");
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

FiniteWordSpec::FiniteWordSpec(Alphabet a, Word w)
    : alphabet(std::move(a)), word(std::move(w)) {
  if (word.empty()) {
    throw std::invalid_argument("finite word spec: word may not be empty");
  }
  if (word.alphabet_size != alphabet.size()) {
    throw std::invalid_argument("finite word spec: alphabet mismatch");
  }
}

const Alphabet& alphabet_of(const LanguageSpec& spec) {
  return std::visit([](const auto& s) -> const Alphabet& { return s.alphabet; },
                    spec);
}

namespace {

// Appending `letter` to a word whose factors already avoid the forbidden
// set: only the new suffix of each forbidden length needs checking.
bool creates_forbidden_suffix(const std::vector<Symbol>& prefix, Symbol letter,
                              const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    const std::size_t len = f.size();
    if (len > prefix.size() + 1) continue;
    bool match = f.symbols[len - 1] == letter;
    for (std::size_t i = 0; match && i + 1 < len; ++i) {
      match = prefix[prefix.size() - len + 1 + i] == f.symbols[i];
    }
    if (match) return true;
  }
  return false;
}

std::set<Word> tmc_factors(const TMCSpec& spec, std::size_t n) {
  const std::uint32_t m = static_cast<std::uint32_t>(spec.alphabet.size());
  std::vector<std::vector<Symbol>> succ(m);
  for (const auto& [u, v] : spec.admissible) {
    succ[u].push_back(v);
  }
  std::set<Word> out;
  std::vector<Symbol> cur;
  std::function<void()> extend = [&]() {
    if (cur.size() == n) {
      out.insert(Word(cur, m));
      return;
    }
    if (cur.empty()) {
      for (Symbol a = 0; a < m; ++a) {
        cur.push_back(a);
        extend();
        cur.pop_back();
      }
    } else {
      for (Symbol b : succ[cur.back()]) {
        cur.push_back(b);
        extend();
        cur.pop_back();
      }
    }
  };
  extend();
  return out;
}

std::set<Word> sft_factors(const SFTSpec& spec, std::size_t n) {
  const std::uint32_t m = static_cast<std::uint32_t>(spec.alphabet.size());
  std::set<Word> out;
  std::vector<Symbol> cur;
  std::function<void()> extend = [&]() {
    if (cur.size() == n) {
      out.insert(Word(cur, m));
      return;
    }
    for (Symbol a = 0; a < m; ++a) {
      if (creates_forbidden_suffix(cur, a, spec.forbidden)) continue;
      cur.push_back(a);
      extend();
      cur.pop_back();
    }
  };
  extend();
  return out;
}

std::vector<std::vector<std::vector<std::uint32_t>>> sofic_step_table(
    const SoficSpec& spec) {
  // step[symbol][state] = successor states.
  std::vector<std::vector<std::vector<std::uint32_t>>> step(
      spec.alphabet.size(),
      std::vector<std::vector<std::uint32_t>>(spec.states));
  for (const auto& e : spec.edges) {
    step[e.symbol][e.from].push_back(e.to);
  }
  return step;
}

std::set<Word> sofic_factors(const SoficSpec& spec, std::size_t n) {
  const std::uint32_t m = static_cast<std::uint32_t>(spec.alphabet.size());
  auto step = sofic_step_table(spec);
  std::set<Word> out;
  std::vector<Symbol> cur;
  std::vector<bool> reach(spec.states, true);  // paths may start anywhere
  std::function<void(const std::vector<bool>&)> extend =
      [&](const std::vector<bool>& states) {
        if (cur.size() == n) {
          out.insert(Word(cur, m));
          return;
        }
        for (Symbol a = 0; a < m; ++a) {
          std::vector<bool> next(spec.states, false);
          bool any = false;
          for (std::uint32_t s = 0; s < spec.states; ++s) {
            if (!states[s]) continue;
            for (std::uint32_t t : step[a][s]) {
              next[t] = true;
              any = true;
            }
          }
          if (!any) continue;
          cur.push_back(a);
          extend(next);
          cur.pop_back();
        }
      };
  extend(reach);
  return out;
}

}  // namespace

std::set<Word> factors(const LanguageSpec& spec, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("factors: n must be positive");
  }
  return std::visit(
      [&](const auto& s) -> std::set<Word> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteWordSpec>) {
          if (n > s.word.size()) {
            throw std::invalid_argument(
                "factors: n exceeds the finite word length");
          }
          std::set<Word> out;
          for (std::size_t i = 0; i + n <= s.word.size(); ++i) {
            out.insert(Word(std::vector<Symbol>(
                                s.word.symbols.begin() + i,
                                s.word.symbols.begin() + i + n),
                            s.word.alphabet_size));
          }
          return out;
        } else if constexpr (std::is_same_v<T, TMCSpec>) {
          return tmc_factors(s, n);
        } else if constexpr (std::is_same_v<T, SFTSpec>) {
          return sft_factors(s, n);
        } else if constexpr (std::is_same_v<T, SoficSpec>) {
          return sofic_factors(s, n);
        } else {
          static_assert(std::is_same_v<T, ExplicitSpec>);
          if (s.word_length() != n) {
            throw std::invalid_argument(
                "factors: explicit set has length " +
                std::to_string(s.word_length()) + ", not " + std::to_string(n));
          }
          return std::set<Word>(s.words.begin(), s.words.end());
        }
      },
      spec);
}

namespace {

std::set<Word> tmc_circular(const TMCSpec& spec, std::size_t n) {
  std::set<Word> out;
  for (const Word& w : tmc_factors(spec, n)) {
    if (spec.admissible.count({w.symbols[n - 1], w.symbols[0]})) {
      out.insert(w);
    }
  }
  return out;
}

std::set<Word> sft_circular(const SFTSpec& spec, std::size_t n) {
  const std::size_t longest = spec.max_forbidden_length();
  if (longest > n) {
    throw std::invalid_argument(
        "circular_admissible: span shorter than longest forbidden word");
  }
  std::set<Word> out;
  for (const Word& w : sft_factors(spec, n)) {
    bool ok = true;
    // Linear occurrences are already excluded; check the wrapping windows of
    // the doubled word.
    for (const auto& f : spec.forbidden) {
      const std::size_t len = f.size();
      for (std::size_t p = n - len + 1; ok && p < n; ++p) {
        bool match = true;
        for (std::size_t i = 0; match && i < len; ++i) {
          match = w.symbols[(p + i) % n] == f.symbols[i];
        }
        if (match) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.insert(w);
  }
  return out;
}

// Boolean square matrices as bit rows.
struct BitMatrix {
  std::size_t n = 0;
  std::size_t blocks = 0;
  std::vector<std::uint64_t> bits;

  explicit BitMatrix(std::size_t size)
      : n(size), blocks((size + 63) / 64), bits(n * blocks, 0) {}

  void set(std::size_t i, std::size_t j) {
    bits[i * blocks + j / 64] |= std::uint64_t(1) << (j % 64);
  }
  bool get(std::size_t i, std::size_t j) const {
    return (bits[i * blocks + j / 64] >> (j % 64)) & 1;
  }

  BitMatrix multiply(const BitMatrix& other) const {
    BitMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!get(i, j)) continue;
        for (std::size_t b = 0; b < blocks; ++b) {
          r.bits[i * blocks + b] |= other.bits[j * blocks + b];
        }
      }
    }
    return r;
  }

  bool all_set() const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!get(i, j)) return false;
      }
    }
    return true;
  }

  bool any_diagonal() const {
    for (std::size_t i = 0; i < n; ++i) {
      if (get(i, i)) return true;
    }
    return false;
  }

  BitMatrix transitive_closure() const {
    BitMatrix r = *this;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r.get(i, k)) continue;
        for (std::size_t b = 0; b < blocks; ++b) {
          r.bits[i * blocks + b] |= r.bits[k * blocks + b];
        }
      }
    }
    return r;
  }
};

std::set<Word> sofic_circular(const SoficSpec& spec, std::size_t n) {
  const std::size_t s = spec.states;
  std::vector<BitMatrix> letter(spec.alphabet.size(), BitMatrix(s));
  for (const auto& e : spec.edges) {
    letter[e.symbol].set(e.from, e.to);
  }
  std::set<Word> out;
  for (const Word& w : sofic_factors(spec, n)) {
    BitMatrix rel = letter[w.symbols[0]];
    for (std::size_t i = 1; i < n; ++i) {
      rel = rel.multiply(letter[w.symbols[i]]);
    }
    if (rel.transitive_closure().any_diagonal()) {
      out.insert(w);
    }
  }
  return out;
}

}  // namespace

std::set<Word> circular_admissible(const LanguageSpec& spec, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("circular_admissible: n must be positive");
  }
  return std::visit(
      [&](const auto& s) -> std::set<Word> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TMCSpec>) {
          return tmc_circular(s, n);
        } else if constexpr (std::is_same_v<T, SFTSpec>) {
          return sft_circular(s, n);
        } else if constexpr (std::is_same_v<T, SoficSpec>) {
          return sofic_circular(s, n);
        } else {
          throw std::invalid_argument(
              "circular_admissible: only defined for tmc, sft and sofic "
              "specs");
        }
      },
      spec);
}

namespace {

// gcd of cycle lengths of a strongly connected transition relation,
// 0 when there is no cycle.
std::size_t chain_period(const TMCSpec& spec) {
  const std::size_t m = spec.alphabet.size();
  std::vector<std::vector<Symbol>> succ(m);
  for (const auto& [u, v] : spec.admissible) {
    succ[u].push_back(v);
  }
  std::vector<long long> dist(m, -1);
  std::vector<Symbol> queue;
  dist[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Symbol u = queue[head];
    for (Symbol v : succ[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  long long g = 0;
  for (const auto& [u, v] : spec.admissible) {
    long long diff = dist[u] + 1 - dist[v];
    g = std::gcd(g, diff < 0 ? -diff : diff);
  }
  return static_cast<std::size_t>(g);
}

}  // namespace

bool irreducible(const TMCSpec& spec) {
  const std::size_t m = spec.alphabet.size();
  std::vector<std::vector<Symbol>> fwd(m), bwd(m);
  for (const auto& [u, v] : spec.admissible) {
    fwd[u].push_back(v);
    bwd[v].push_back(u);
  }
  auto reach_all = [&](const std::vector<std::vector<Symbol>>& adj) {
    std::vector<bool> seen(m, false);
    std::vector<Symbol> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Symbol v : adj[queue[head]]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach_all(fwd) && reach_all(bwd);
}

bool aperiodic(const TMCSpec& spec) {
  return irreducible(spec) && chain_period(spec) == 1;
}

std::size_t primitivity_exponent(const TMCSpec& spec) {
  if (!irreducible(spec)) {
    throw std::invalid_argument(
        "primitivity_exponent: chain is not irreducible");
  }
  if (chain_period(spec) != 1) {
    throw std::invalid_argument("primitivity_exponent: chain is not aperiodic");
  }
  const std::size_t m = spec.alphabet.size();
  BitMatrix adj(m);
  for (const auto& [u, v] : spec.admissible) {
    adj.set(u, v);
  }
  const std::size_t wielandt = m * m + 2 - 2 * m;
  BitMatrix power = adj;
  for (std::size_t k = 1; k <= wielandt; ++k) {
    if (power.all_set()) {
      return k;
    }
    power = power.multiply(adj);
  }
  throw std::runtime_error(
      "primitivity_exponent: Wielandt bound exceeded (unreachable for a "
      "primitive chain)");
}

Word BlockRecoding::encode(const Word& original) const {
  if (original.size() < block_length) {
    throw std::invalid_argument("encode: word shorter than the block length");
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i + block_length <= original.size(); ++i) {
    Word window(std::vector<Symbol>(original.symbols.begin() + i,
                                    original.symbols.begin() + i +
                                        block_length),
                original.alphabet_size);
    auto it = std::lower_bound(blocks.begin(), blocks.end(), window);
    if (it == blocks.end() || *it != window) {
      throw std::invalid_argument("encode: word contains a forbidden block");
    }
    out.push_back(static_cast<Symbol>(it - blocks.begin()));
  }
  return Word(std::move(out), static_cast<std::uint32_t>(blocks.size()));
}

Word BlockRecoding::decode(const Word& block_word) const {
  if (block_word.empty()) {
    throw std::invalid_argument("decode: empty block word");
  }
  std::vector<Symbol> out = blocks[block_word.symbols[0]].symbols;
  for (std::size_t i = 1; i < block_word.size(); ++i) {
    out.push_back(blocks[block_word.symbols[i]].symbols.back());
  }
  return Word(std::move(out),
              static_cast<std::uint32_t>(original_alphabet.size()));
}

BlockRecoding sft_to_tmc(const SFTSpec& spec) {
  const std::size_t big_n = spec.max_forbidden_length();
  const std::size_t block_len = big_n - 1;
  std::set<Word> block_set = sft_factors(spec, block_len);
  if (block_set.empty()) {
    throw std::runtime_error("subshift empty");
  }
  BlockRecoding rec;
  rec.blocks.assign(block_set.begin(), block_set.end());
  rec.original_alphabet = spec.alphabet;
  rec.block_length = block_len;

  std::vector<std::string> labels;
  labels.reserve(rec.blocks.size());
  for (const auto& b : rec.blocks) {
    labels.push_back(word_text(b, spec.alphabet));
  }
  Alphabet block_alphabet(std::move(labels));

  std::set<std::pair<Symbol, Symbol>> pairs;
  for (std::size_t i = 0; i < rec.blocks.size(); ++i) {
    for (std::size_t j = 0; j < rec.blocks.size(); ++j) {
      const Word& u = rec.blocks[i];
      const Word& v = rec.blocks[j];
      bool overlap = true;
      for (std::size_t p = 0; overlap && p + 1 < block_len; ++p) {
        overlap = u.symbols[p + 1] == v.symbols[p];
      }
      if (!overlap) continue;
      // Fused N-word u + last letter of v must avoid every forbidden word.
      std::vector<Symbol> fused = u.symbols;
      fused.push_back(v.symbols.back());
      bool ok = true;
      for (const auto& f : spec.forbidden) {
        const std::size_t len = f.size();
        for (std::size_t p = 0; ok && p + len <= fused.size(); ++p) {
          bool match = true;
          for (std::size_t q = 0; match && q < len; ++q) {
            match = fused[p + q] == f.symbols[q];
          }
          if (match) ok = false;
        }
        if (!ok) break;
      }
      if (ok) {
        pairs.emplace(static_cast<Symbol>(i), static_cast<Symbol>(j));
      }
    }
  }
  rec.tmc = TMCSpec(std::move(block_alphabet), std::move(pairs));
  return rec;
}

Word substitution_fixed_point(const std::vector<Word>& rules, Symbol seed,
                              std::size_t length) {
  if (length < 1) {
    throw std::invalid_argument("substitution_fixed_point: length must be "
                                "positive");
  }
  if (rules.empty() || seed >= rules.size()) {
    throw std::invalid_argument("substitution_fixed_point: missing rule for "
                                "the seed");
  }
  const std::uint32_t m = static_cast<std::uint32_t>(rules.size());
  for (const auto& r : rules) {
    if (r.empty() || r.alphabet_size != m) {
      throw std::invalid_argument(
          "substitution_fixed_point: every symbol needs a nonempty rule over "
          "the same alphabet");
    }
  }
  if (rules[seed].size() < 2 || rules[seed].symbols[0] != seed) {
    throw std::invalid_argument(
        "substitution_fixed_point: seed rule must start with the seed and "
        "have length at least 2");
  }
  std::vector<Symbol> cur{seed};
  while (cur.size() < length) {
    std::vector<Symbol> next;
    next.reserve(cur.size() * 2);
    for (Symbol s : cur) {
      const auto& img = rules[s].symbols;
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= length) break;
    }
    cur = std::move(next);
  }
  cur.resize(length);
  return Word(std::move(cur), m);
}

TMCSpec make_full_tmc(std::size_t m) {
  Alphabet a(m);
  std::set<std::pair<Symbol, Symbol>> pairs;
  for (Symbol i = 0; i < m; ++i) {
    for (Symbol j = 0; j < m; ++j) {
      pairs.emplace(i, j);
    }
  }
  return TMCSpec(std::move(a), std::move(pairs));
}

TMCSpec make_kautz_tmc(std::size_t m) {
  Alphabet a(m);
  std::set<std::pair<Symbol, Symbol>> pairs;
  for (Symbol i = 0; i < m; ++i) {
    for (Symbol j = 0; j < m; ++j) {
      if (i != j) pairs.emplace(i, j);
    }
  }
  return TMCSpec(std::move(a), std::move(pairs));
}

TMCSpec make_golden_mean_tmc() {
  return TMCSpec(Alphabet(2), {{0, 0}, {0, 1}, {1, 0}});
}

}  // namespace slider
