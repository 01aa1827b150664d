#include "slider/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace slider {

Digraph::Digraph(std::string name, std::vector<std::string> keys,
                 std::vector<KeyArrow> arrows)
    : name_(std::move(name)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end()) {
    throw std::invalid_argument("digraph '" + name_ + "': duplicate vertex key");
  }
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(keys_.size());
  for (std::uint32_t i = 0; i < keys_.size(); ++i) {
    index.emplace(keys_[i], i);
  }
  arrows_.reserve(arrows.size());
  for (auto& a : arrows) {
    auto s = index.find(a.src);
    auto d = index.find(a.dst);
    if (s == index.end() || d == index.end()) {
      throw std::invalid_argument("digraph '" + name_ + "': arrow endpoint '" +
                                  (s == index.end() ? a.src : a.dst) +
                                  "' is not a vertex");
    }
    arrows_.push_back(DigraphArrow{s->second, d->second, std::move(a.label)});
  }
  std::sort(arrows_.begin(), arrows_.end());
  if (std::adjacent_find(arrows_.begin(), arrows_.end()) != arrows_.end()) {
    throw std::invalid_argument("digraph '" + name_ +
                                "': duplicate (src, dst, label) arrow");
  }
}

std::optional<std::uint32_t> Digraph::index_of(const std::string& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<std::uint32_t>(it - keys_.begin());
}

std::vector<std::vector<std::size_t>> Digraph::out_arrows() const {
  std::vector<std::vector<std::size_t>> out(size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    out[arrows_[i].src].push_back(i);
  }
  return out;
}

Digraph induced_subgraph(const Digraph& g, const std::set<std::string>& keep) {
  std::vector<std::string> keys;
  keys.reserve(keep.size());
  std::vector<bool> kept(g.size(), false);
  for (const auto& key : keep) {
    auto idx = g.index_of(key);
    if (!idx) {
      throw std::invalid_argument("induced_subgraph: unknown vertex '" + key +
                                  "'");
    }
    kept[*idx] = true;
    keys.push_back(key);
  }
  std::vector<KeyArrow> arrows;
  for (const auto& a : g.arrows()) {
    if (kept[a.src] && kept[a.dst]) {
      arrows.push_back(KeyArrow{g.key(a.src), g.key(a.dst), a.label});
    }
  }
  return Digraph(g.name() + "_induced", std::move(keys), std::move(arrows));
}

Digraph step_d_induced(const Digraph& g, const std::set<std::string>& x,
                       std::size_t d, bool strict) {
  if (d == 0) {
    throw std::invalid_argument("step_d_induced: d must be positive");
  }
  std::vector<std::uint32_t> sources;
  std::vector<bool> in_x(g.size(), false);
  for (const auto& key : x) {
    auto idx = g.index_of(key);
    if (!idx) {
      throw std::invalid_argument("step_d_induced: unknown vertex '" + key +
                                  "'");
    }
    in_x[*idx] = true;
    sources.push_back(*idx);
  }

  // Per-vertex successor lists (vertices, deduplicated).
  std::vector<std::vector<std::uint32_t>> succ(g.size());
  for (const auto& a : g.arrows()) {
    succ[a.src].push_back(a.dst);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  std::vector<KeyArrow> arrows;
  std::vector<bool> frontier(g.size(), false), next(g.size(), false),
      target(g.size(), false);
  for (std::uint32_t src : sources) {
    std::fill(frontier.begin(), frontier.end(), false);
    std::fill(target.begin(), target.end(), false);
    frontier[src] = true;
    // Exact-depth frontiers; walks may revisit vertices at later depths.
    for (std::size_t depth = 1; depth <= d; ++depth) {
      std::fill(next.begin(), next.end(), false);
      bool any = false;
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (!frontier[v]) continue;
        for (std::uint32_t w : succ[v]) {
          next[w] = true;
          any = true;
        }
      }
      frontier.swap(next);
      if (!strict || depth == d) {
        for (std::uint32_t v = 0; v < g.size(); ++v) {
          if (frontier[v]) target[v] = true;
        }
      }
      if (!any) break;
    }
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (target[v] && in_x[v]) {
        arrows.push_back(KeyArrow{g.key(src), g.key(v), std::nullopt});
      }
    }
  }
  std::vector<std::string> keys(x.begin(), x.end());
  std::string name = g.name() + "_step" + (strict ? "_eq" : "_le") +
                     std::to_string(d);
  return Digraph(std::move(name), std::move(keys), std::move(arrows));
}

Digraph tensor_product(const Digraph& g1, const Digraph& g2) {
  if (g1.size() == 0 || g2.size() == 0) {
    throw std::invalid_argument("tensor_product: factors must be nonempty");
  }
  std::vector<std::string> keys;
  keys.reserve(g1.size() * g2.size());
  for (const auto& k1 : g1.keys()) {
    for (const auto& k2 : g2.keys()) {
      keys.push_back("(" + k1 + "," + k2 + ")");
    }
  }
  std::vector<KeyArrow> arrows;
  arrows.reserve(g1.arrow_count() * g2.arrow_count());
  for (const auto& a : g1.arrows()) {
    for (const auto& b : g2.arrows()) {
      arrows.push_back(
          KeyArrow{"(" + g1.key(a.src) + "," + g2.key(b.src) + ")",
                   "(" + g1.key(a.dst) + "," + g2.key(b.dst) + ")",
                   std::nullopt});
    }
  }
  return Digraph("tensor(" + g1.name() + "," + g2.name() + ")",
                 std::move(keys), std::move(arrows));
}

Digraph cycle_digraph(std::size_t k) {
  if (k < 1) {
    throw std::invalid_argument("cycle_digraph: k must be positive");
  }
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    keys.push_back(std::to_string(i));
    arrows.push_back(KeyArrow{std::to_string(i), std::to_string((i + 1) % k),
                              std::nullopt});
  }
  return Digraph("cycle_" + std::to_string(k), std::move(keys),
                 std::move(arrows));
}

namespace {

std::string arrow_key(const Digraph& g, const DigraphArrow& a) {
  return g.key(a.src) + ">" + g.key(a.dst) + ">" + a.label.value_or("");
}

}  // namespace

Digraph line_digraph(const Digraph& g) {
  std::vector<std::string> keys;
  keys.reserve(g.arrow_count());
  for (const auto& a : g.arrows()) {
    keys.push_back(arrow_key(g, a));
  }
  // Arrows of g grouped by source vertex, for b-lookup by src.
  std::vector<std::vector<std::size_t>> by_src = g.out_arrows();
  std::vector<KeyArrow> arrows;
  for (const auto& a : g.arrows()) {
    for (std::size_t j : by_src[a.dst]) {
      arrows.push_back(
          KeyArrow{arrow_key(g, a), arrow_key(g, g.arrows()[j]), std::nullopt});
    }
  }
  return Digraph("line(" + g.name() + ")", std::move(keys), std::move(arrows));
}

namespace {

// Iterative Tarjan; recursion would overflow on the larger slider graphs.
std::vector<std::uint32_t> strong_component_ids(const Digraph& g,
                                                std::uint32_t& count) {
  const std::size_t n = g.size();
  auto out = g.out_arrows();
  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;
  count = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      std::uint32_t v = f.v;
      if (f.edge == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.edge < out[v].size()) {
        std::uint32_t w = g.arrows()[out[v][f.edge]].dst;
        ++f.edge;
        if (index[w] == kUnset) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
          if (w == v) break;
        }
        ++count;
      }
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comp;
}

struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<std::string>> connected_components(const Digraph& g,
                                                           Connectivity mode) {
  std::vector<std::uint32_t> comp(g.size());
  if (mode == Connectivity::kStrong) {
    std::uint32_t count = 0;
    comp = strong_component_ids(g, count);
  } else {
    Dsu dsu(g.size());
    for (const auto& a : g.arrows()) {
      dsu.unite(a.src, a.dst);
    }
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      comp[v] = dsu.find(v);
    }
  }
  // Keys are sorted, so walking vertices in index order yields sorted members
  // and components ordered by smallest member.
  std::map<std::uint32_t, std::size_t> first_seen;
  std::vector<std::vector<std::string>> result;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = first_seen.try_emplace(comp[v], result.size());
    if (fresh) {
      result.emplace_back();
    }
    result[it->second].push_back(g.key(v));
  }
  return result;
}

std::optional<std::vector<std::size_t>> eulerian_cycle(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> in_deg(n, 0), out_deg(n, 0);
  for (const auto& a : g.arrows()) {
    ++out_deg[a.src];
    ++in_deg[a.dst];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_deg[v] != out_deg[v]) {
      return std::nullopt;
    }
  }
  if (g.arrow_count() == 0) {
    return std::vector<std::size_t>{};
  }
  // Weak connectivity over the non-isolated vertices. With balanced degrees
  // this is equivalent to strong connectivity.
  {
    Dsu dsu(n);
    for (const auto& a : g.arrows()) {
      dsu.unite(a.src, a.dst);
    }
    std::optional<std::uint32_t> root;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (in_deg[v] + out_deg[v] == 0) continue;
      std::uint32_t r = dsu.find(v);
      if (root && *root != r) {
        return std::nullopt;
      }
      root = r;
    }
  }

  auto out = g.out_arrows();  // per vertex, already in (dst, label) order
  std::vector<std::size_t> cursor(n, 0);
  std::uint32_t start = g.arrows()[0].src;  // least-keyed vertex with arrows

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Frame {
    std::uint32_t vertex;
    std::size_t entered_by;
  };
  std::vector<Frame> stack{{start, kNone}};
  std::vector<std::size_t> circuit;
  circuit.reserve(g.arrow_count());
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (cursor[f.vertex] < out[f.vertex].size()) {
      std::size_t e = out[f.vertex][cursor[f.vertex]++];
      stack.push_back({g.arrows()[e].dst, e});
    } else {
      if (f.entered_by != kNone) {
        circuit.push_back(f.entered_by);
      }
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != g.arrow_count()) {
    return std::nullopt;  // unreachable given the checks above
  }
  return circuit;
}

namespace {

// Distinct (src, dst) pairs; the theorems compare digraphs, labels ignored.
std::set<std::pair<std::uint32_t, std::uint32_t>> arrow_pairs(
    const Digraph& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& a : g.arrows()) {
    pairs.emplace(a.src, a.dst);
  }
  return pairs;
}

}  // namespace

IsoCheck verify_iso(const Digraph& g1, const Digraph& g2,
                    const std::unordered_map<std::string, std::string>& f) {
  std::vector<std::uint32_t> image(g1.size());
  for (std::uint32_t v = 0; v < g1.size(); ++v) {
    auto it = f.find(g1.key(v));
    if (it == f.end()) {
      throw std::invalid_argument("verify_iso: map not defined on vertex '" +
                                  g1.key(v) + "'");
    }
    auto idx = g2.index_of(it->second);
    if (!idx) {
      return IsoCheck{false, "image '" + it->second + "' of vertex '" +
                                 g1.key(v) + "' is not a vertex"};
    }
    image[v] = *idx;
  }
  if (g1.size() != g2.size()) {
    return IsoCheck{false, "vertex counts differ: " +
                               std::to_string(g1.size()) + " vs " +
                               std::to_string(g2.size())};
  }
  std::vector<bool> hit(g2.size(), false);
  for (std::uint32_t v = 0; v < g1.size(); ++v) {
    if (hit[image[v]]) {
      return IsoCheck{false, "not injective: vertices '" + g1.key(v) +
                                 "' and an earlier one share image '" +
                                 g2.key(image[v]) + "'"};
    }
    hit[image[v]] = true;
  }
  auto pairs1 = arrow_pairs(g1);
  auto pairs2 = arrow_pairs(g2);
  if (pairs1.size() != pairs2.size()) {
    return IsoCheck{false, "arrow counts differ: " +
                               std::to_string(pairs1.size()) + " vs " +
                               std::to_string(pairs2.size())};
  }
  for (const auto& [s, d] : pairs1) {
    if (!pairs2.count({image[s], image[d]})) {
      return IsoCheck{false, "arrow " + g1.key(s) + " -> " + g1.key(d) +
                                 " has no image arrow " + g2.key(image[s]) +
                                 " -> " + g2.key(image[d])};
    }
  }
  return IsoCheck{true, ""};
}

namespace {

struct AdjSets {
  std::vector<std::vector<std::uint32_t>> out, in;
  std::vector<std::uint64_t> sig;  // per-vertex 1-neighbourhood invariant
};

AdjSets adjacency_signature(const Digraph& g) {
  AdjSets adj;
  adj.out.resize(g.size());
  adj.in.resize(g.size());
  for (const auto& pair : arrow_pairs(g)) {
    adj.out[pair.first].push_back(pair.second);
    adj.in[pair.second].push_back(pair.first);
  }
  std::vector<std::uint64_t> deg(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    deg[v] = (static_cast<std::uint64_t>(adj.in[v].size()) << 20) |
             adj.out[v].size();
  }
  adj.sig.resize(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    // Order-independent combination of the neighbours' degree vectors.
    std::uint64_t h = deg[v];
    for (std::uint32_t w : adj.out[v]) {
      h += 0x9e3779b97f4a7c15ULL ^ (deg[w] * 1000003ULL + 1);
    }
    for (std::uint32_t w : adj.in[v]) {
      h += 0xc2b2ae3d27d4eb4fULL ^ (deg[w] * 1000003ULL + 2);
    }
    adj.sig[v] = h;
  }
  return adj;
}

}  // namespace

std::optional<IsoWitness> find_iso(const Digraph& g1, const Digraph& g2,
                                   std::size_t cap) {
  if (g1.size() > cap || g2.size() > cap) {
    throw std::runtime_error(
        "find_iso: vertex count exceeds cap " + std::to_string(cap) +
        "; use verify_iso with an explicit map instead");
  }
  if (g1.size() != g2.size()) {
    return std::nullopt;
  }
  AdjSets a1 = adjacency_signature(g1);
  AdjSets a2 = adjacency_signature(g2);
  if (arrow_pairs(g1).size() != arrow_pairs(g2).size()) {
    return std::nullopt;
  }
  {
    auto s1 = a1.sig, s2 = a2.sig;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) {
      return std::nullopt;
    }
  }
  const std::size_t n = g1.size();
  // Map most-constrained (rarest signature) vertices first.
  std::unordered_map<std::uint64_t, std::size_t> freq;
  for (auto s : a1.sig) ++freq[s];
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    auto fa = freq[a1.sig[a]], fb = freq[a1.sig[b]];
    return fa != fb ? fa < fb : a < b;
  });

  constexpr std::uint32_t kUnset = 0xffffffff;
  std::vector<std::uint32_t> map(n, kUnset), rmap(n, kUnset);
  std::vector<std::vector<bool>> adj_out2(n, std::vector<bool>(n, false));
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w : a2.out[v]) adj_out2[v][w] = true;
  }

  auto consistent = [&](std::uint32_t v, std::uint32_t cand) {
    if (a1.sig[v] != a2.sig[cand]) return false;
    for (std::uint32_t w : a1.out[v]) {
      if (map[w] != kUnset && !adj_out2[cand][map[w]]) return false;
    }
    for (std::uint32_t w : a1.in[v]) {
      if (map[w] != kUnset && !adj_out2[map[w]][cand]) return false;
    }
    // Mapped g2-neighbourhood of cand must be matched by mapped g1 arrows.
    for (std::uint32_t w : a2.out[cand]) {
      if (rmap[w] != kUnset) {
        auto& row = a1.out[v];
        if (std::find(row.begin(), row.end(), rmap[w]) == row.end())
          return false;
      }
    }
    for (std::uint32_t w : a2.in[cand]) {
      if (rmap[w] != kUnset) {
        auto& row = a1.in[v];
        if (std::find(row.begin(), row.end(), rmap[w]) == row.end())
          return false;
      }
    }
    return true;
  };

  struct Frame {
    std::uint32_t cand = 0;  // next candidate to try for order[depth]
  };
  std::vector<Frame> stack(1);
  while (!stack.empty()) {
    std::size_t depth = stack.size() - 1;
    if (depth == n) {
      IsoWitness w;
      w.map = map;
      return w;
    }
    std::uint32_t v = order[depth];
    Frame& f = stack.back();
    bool advanced = false;
    while (f.cand < n) {
      std::uint32_t cand = f.cand++;
      if (rmap[cand] != kUnset) continue;
      if (!consistent(v, cand)) continue;
      map[v] = cand;
      rmap[cand] = v;
      stack.emplace_back();
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        std::uint32_t prev = order[stack.size() - 1];
        rmap[map[prev]] = kUnset;
        map[prev] = kUnset;
      }
    }
  }
  return std::nullopt;
}

}  // namespace slider
