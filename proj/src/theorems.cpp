#include "slider/theorems.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"
#include "slider/slider_graphs.hpp"

namespace slider {

namespace {

std::string k_text(const GroupTable& b, const std::vector<Symbol>& k) {
  std::string out = "{";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i > 0) out += ",";
    out += b.alphabet().label(k[i]);
  }
  return out + "}";
}

std::vector<Symbol> whole_group(const GroupTable& b) {
  std::vector<Symbol> k(b.order());
  for (std::size_t i = 0; i < b.order(); ++i) {
    k[i] = static_cast<Symbol>(i);
  }
  return k;
}

TheoremReport compare_by_map(
    std::string theorem, std::string params, const Digraph& left,
    const Digraph& right,
    const std::unordered_map<std::string, std::string>& map,
    std::string witness_note) {
  TheoremReport report;
  report.theorem = std::move(theorem);
  report.params = std::move(params);
  report.left_name = left.name();
  report.left_vertices = left.size();
  report.left_arrows = left.arrow_count();
  report.right_name = right.name();
  report.right_vertices = right.size();
  report.right_arrows = right.arrow_count();
  IsoCheck check = verify_iso(left, right, map);
  report.pass = check.ok;
  report.detail = check.ok ? std::move(witness_note) : check.violation;
  return report;
}

}  // namespace

std::string TheoremReport::text() const {
  std::string out;
  out += "theorem: " + theorem + "\n";
  out += "params: " + params + "\n";
  out += "left: " + left_name + " vertices=" + std::to_string(left_vertices) +
         " arrows=" + std::to_string(left_arrows) + "\n";
  out += "right: " + right_name +
         " vertices=" + std::to_string(right_vertices) +
         " arrows=" + std::to_string(right_arrows) + "\n";
  out += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
  out += "witness: " + detail + "\n";
  if (fallback_pass) {
    out += std::string("fallback-iso-search: ") +
           (*fallback_pass ? "isomorphic (convention bug in the explicit map)"
                           : "no isomorphism found") +
           "\n";
  }
  return out;
}

std::string TheoremReport::json_text() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["params"] = params;
  j["left"] = {{"name", left_name},
               {"vertices", left_vertices},
               {"arrows", left_arrows}};
  j["right"] = {{"name", right_name},
                {"vertices", right_vertices},
                {"arrows", right_arrows}};
  j["result"] = pass ? "PASS" : "FAIL";
  j["witness"] = detail;
  if (fallback_pass) {
    j["fallback_iso_search"] = *fallback_pass;
  }
  return j.dump(2) + "\n";
}

TheoremReport verify_thm_sch(std::size_t n, const GroupTable& b) {
  GeneratorFamily fam{GeneratorKind::kWalkRightSwitch, whole_group(b)};
  Digraph left = lamplighter_schreier_digraph(n, b, fam);
  Digraph right = full_debruijn(b.alphabet(), n);
  std::unordered_map<std::string, std::string> identity;
  for (const auto& key : left.keys()) {
    identity.emplace(key, key);
  }
  return compare_by_map(
      "sch", "n=" + std::to_string(n) + " |B|=" + std::to_string(b.order()),
      left, right, identity, "identity map on the B^n vertex keys");
}

TheoremReport verify_thm_schc(std::size_t n, const GroupTable& b,
                              const std::vector<Symbol>& k) {
  GeneratorFamily fam{GeneratorKind::kWalkRightSwitch, k};
  Digraph left = lamplighter_schreier_digraph(n, b, fam);
  Digraph right = cayley_slider(b, k, n);
  std::unordered_map<std::string, std::string> identity;
  for (const auto& key : left.keys()) {
    identity.emplace(key, key);
  }
  return compare_by_map("schc",
                        "n=" + std::to_string(n) +
                            " |B|=" + std::to_string(b.order()) +
                            " K=" + k_text(b, k),
                        left, right, identity,
                        "identity map on the B^n vertex keys");
}

TheoremReport verify_thm_spider(std::size_t n, const GroupTable& b,
                                const std::vector<Symbol>& k) {
  GeneratorFamily fam{GeneratorKind::kWalkRightSwitch, k};
  Digraph left = lamplighter_cayley_digraph(n, b, fam);
  Digraph right = tensor_product(cycle_digraph(n), cayley_slider(b, k, n));

  // (a, Phi) -> (a, T^{-a} Phi); this is the coset-projection pairing.
  std::unordered_map<std::string, std::string> map;
  map.reserve(left.size());
  const std::size_t m = b.order();
  std::vector<Word> configs;
  {
    std::vector<Symbol> cur(n, 0);
    while (true) {
      configs.push_back(Word(cur, static_cast<std::uint32_t>(m)));
      std::size_t i = n;
      while (i > 0 && cur[i - 1] + 1u == m) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (const Word& phi : configs) {
      LamplighterElement g{a, phi};
      map.emplace(element_key(n, b, g),
                  "(" + std::to_string(a) + "," +
                      word_text(coset_projection(n, b, g), b.alphabet()) +
                      ")");
    }
  }
  TheoremReport report = compare_by_map(
      "spider",
      "n=" + std::to_string(n) + " |B|=" + std::to_string(b.order()) +
          " K=" + k_text(b, k),
      left, right, map, "explicit map (a,Phi) -> (a, coset projection)");
  if (!report.pass && left.size() <= kDefaultIsoCap &&
      right.size() <= kDefaultIsoCap) {
    report.fallback_pass = find_iso(left, right).has_value();
  }
  return report;
}

std::string StepSearchResult::text() const {
  std::string out;
  out += "min-step: n=" + std::to_string(n) + " mode=" +
         (mode == Connectivity::kWeak ? std::string("weak")
                                      : std::string("strong")) +
         "\n";
  out += "ambient: vertices=" + std::to_string(ambient_vertices) +
         " arrows=" + std::to_string(ambient_arrows) + "\n";
  out += "periodic: vertices=" + std::to_string(periodic_vertices) + "\n";
  out += "cutoff: " + std::to_string(cutoff) + "\n";
  out += "d_min: " + (d_min ? std::to_string(*d_min) : std::string("absent")) +
         "\n";
  out += "bound: " + (bound ? std::to_string(*bound) : std::string("absent")) +
         "\n";
  return out;
}

std::string StepSearchResult::json_text() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["mode"] = mode == Connectivity::kWeak ? "weak" : "strong";
  j["ambient"] = {{"vertices", ambient_vertices}, {"arrows", ambient_arrows}};
  j["periodic_vertices"] = periodic_vertices;
  j["cutoff"] = cutoff;
  if (d_min) {
    j["d_min"] = *d_min;
  } else {
    j["d_min"] = nullptr;
  }
  if (bound) {
    j["bound"] = *bound;
  } else {
    j["bound"] = nullptr;
  }
  return j.dump(2) + "\n";
}

namespace {

// Connectivity of the pair relation restricted to 0..count-1.
bool pairs_connected(const std::vector<std::vector<bool>>& adj,
                     std::size_t count, Connectivity mode) {
  if (count <= 1) return true;
  auto bfs = [&](bool forward, bool undirected) {
    std::vector<bool> seen(count, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t v = 0; v < count; ++v) {
        bool edge = undirected ? (adj[u][v] || adj[v][u])
                               : (forward ? adj[u][v] : adj[v][u]);
        if (edge && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
  };
  if (mode == Connectivity::kWeak) {
    return bfs(true, true);
  }
  return bfs(true, false) && bfs(false, false);
}

std::optional<std::size_t> recoding_bound(const LanguageSpec& spec) {
  if (const auto* tmc = std::get_if<TMCSpec>(&spec)) {
    if (irreducible(*tmc) && aperiodic(*tmc)) {
      return 2 * primitivity_exponent(*tmc) + 2;
    }
    return std::nullopt;
  }
  if (const auto* sft = std::get_if<SFTSpec>(&spec)) {
    try {
      TMCSpec block = sft_to_tmc(*sft).tmc;
      if (irreducible(block) && aperiodic(block)) {
        return 2 * primitivity_exponent(block) + 2;
      }
    } catch (const std::runtime_error&) {
      // empty subshift: no bound
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

StepSearchResult minimal_connecting_step(const LanguageSpec& spec,
                                         std::size_t n, Connectivity mode,
                                         std::optional<std::size_t> cutoff) {
  std::set<Word> circ = circular_admissible(spec, n);
  if (circ.empty()) {
    throw std::invalid_argument(
        "minimal_connecting_step: no circularly admissible words");
  }
  Digraph ambient = induced_slider(factors(spec, n), alphabet_of(spec));

  StepSearchResult result;
  result.n = n;
  result.mode = mode;
  result.ambient_vertices = ambient.size();
  result.ambient_arrows = ambient.arrow_count();
  result.periodic_vertices = circ.size();
  result.cutoff = cutoff.value_or(ambient.size());
  result.bound = recoding_bound(spec);

  const Alphabet& a = alphabet_of(spec);
  std::vector<std::uint32_t> x_index;  // ambient index of each X word
  std::vector<std::size_t> x_rank(ambient.size(), SIZE_MAX);
  for (const Word& w : circ) {
    auto idx = ambient.index_of(word_text(w, a));
    if (!idx) {
      throw std::logic_error(
          "minimal_connecting_step: circular word missing from the ambient "
          "graph");
    }
    x_rank[*idx] = x_index.size();
    x_index.push_back(*idx);
  }
  const std::size_t xs = x_index.size();

  std::vector<std::vector<std::uint32_t>> succ(ambient.size());
  for (const auto& arrow : ambient.arrows()) {
    succ[arrow.src].push_back(arrow.dst);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // One frontier per source, advanced a depth at a time; reach-within-d
  // accumulates in `adj` restricted to X.
  std::vector<std::vector<bool>> frontier(
      xs, std::vector<bool>(ambient.size(), false));
  for (std::size_t i = 0; i < xs; ++i) {
    frontier[i][x_index[i]] = true;
  }
  std::vector<std::vector<bool>> adj(xs, std::vector<bool>(xs, false));
  std::vector<bool> next(ambient.size(), false);
  for (std::size_t d = 1; d <= result.cutoff; ++d) {
    for (std::size_t i = 0; i < xs; ++i) {
      std::fill(next.begin(), next.end(), false);
      for (std::uint32_t v = 0; v < ambient.size(); ++v) {
        if (!frontier[i][v]) continue;
        for (std::uint32_t w : succ[v]) {
          next[w] = true;
        }
      }
      frontier[i] = next;
      for (std::uint32_t v = 0; v < ambient.size(); ++v) {
        if (next[v] && x_rank[v] != SIZE_MAX) {
          adj[i][x_rank[v]] = true;
        }
      }
    }
    if (pairs_connected(adj, xs, mode)) {
      result.d_min = d;
      break;
    }
  }
  return result;
}

Word debruijn_sequence(std::size_t m, std::size_t n, std::size_t cap) {
  if (m < 2) {
    throw std::invalid_argument("debruijn_sequence: need at least 2 letters");
  }
  if (n < 1) {
    throw std::invalid_argument("debruijn_sequence: n must be positive");
  }
  if (n == 1) {
    std::vector<Symbol> syms(m);
    for (std::size_t i = 0; i < m; ++i) {
      syms[i] = static_cast<Symbol>(i);
    }
    return Word(std::move(syms), static_cast<std::uint32_t>(m));
  }
  Digraph g = full_debruijn(m, n - 1, cap);
  auto cycle = eulerian_cycle(g);
  if (!cycle) {
    throw std::logic_error(
        "debruijn_sequence: de Bruijn graph has no Eulerian cycle");
  }
  Alphabet a(m);
  std::vector<Symbol> syms;
  syms.reserve(cycle->size());
  for (std::size_t arrow_index : *cycle) {
    const auto& label = g.arrows()[arrow_index].label;
    syms.push_back(*a.index_of(*label));
  }
  return Word(std::move(syms), static_cast<std::uint32_t>(m));
}

std::uint64_t count_debruijn_sequences(std::size_t m, std::size_t n) {
  if (m < 2 || n < 1) {
    throw std::invalid_argument(
        "count_debruijn_sequences: need m >= 2 and n >= 1");
  }
  std::size_t length = 1;
  for (std::size_t i = 0; i < n; ++i) {
    length *= m;
    if (length > 16) {
      throw std::invalid_argument(
          "count_debruijn_sequences: m^n must be at most 16 (brute force "
          "only); see the de Bruijn sequence counting literature for larger "
          "parameters");
    }
  }

  // Anchor at the unique 0^n window: each cyclic class up to rotation has
  // exactly one linear representative starting with 0^n.
  std::vector<Symbol> seq(length, 0);
  std::vector<bool> used(length, false);

  auto window_at = [&](std::size_t start) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      code = code * m + seq[(start + i) % length];
    }
    return code;
  };

  std::uint64_t count = 0;
  // Window starting at p - n + 1 completes when position p is placed.
  std::function<void(std::size_t)> place = [&](std::size_t p) {
    if (p == length) {
      // Wrapping windows.
      std::vector<std::size_t> marked;
      bool ok = true;
      for (std::size_t start = length - n + 1; start < length; ++start) {
        std::size_t code = window_at(start);
        if (used[code]) {
          ok = false;
          break;
        }
        used[code] = true;
        marked.push_back(code);
      }
      if (ok) ++count;
      for (std::size_t code : marked) used[code] = false;
      return;
    }
    for (Symbol s = 0; s < m; ++s) {
      seq[p] = s;
      std::size_t code = window_at(p - n + 1);
      if (used[code]) continue;
      used[code] = true;
      place(p + 1);
      used[code] = false;
    }
    seq[p] = 0;
  };

  used[window_at(0)] = true;  // the anchored 0^n window
  place(n);
  return count;
}

}  // namespace slider
