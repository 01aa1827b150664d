#ifndef SLIDER_DIGRAPH_HPP_
#define SLIDER_DIGRAPH_HPP_

// Vertex-labelled, arrow-labelled directed graphs and the graph algorithms
// the structural theorems need: induced and step-d subgraphs, tensor
// products, connectivity, Eulerian cycles, and isomorphism checking.
//
// Determinism contract: vertex keys are kept sorted lexicographically and
// arrows sorted by (src, dst, label); every algorithm breaks ties in that
// order, so repeated runs produce byte-identical exports.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace slider {

// Default ceiling on vertices + arrows for the big constructors, and on the
// vertex count find_iso will attempt.
inline constexpr std::size_t kDefaultSizeCap = std::size_t(1) << 22;
inline constexpr std::size_t kDefaultIsoCap = 5000;

struct DigraphArrow {
  std::uint32_t src;
  std::uint32_t dst;
  std::optional<std::string> label;

  bool operator==(const DigraphArrow&) const = default;
  auto operator<=>(const DigraphArrow&) const = default;
};

// An arrow to be inserted by key before vertex indices exist.
struct KeyArrow {
  std::string src;
  std::string dst;
  std::optional<std::string> label;
};

class Digraph {
 public:
  Digraph() = default;

  // Sorts the keys, maps arrows onto indices, sorts arrows by
  // (src, dst, label). Throws std::invalid_argument on duplicate keys,
  // unknown arrow endpoints, or duplicate (src, dst, label) triples.
  Digraph(std::string name, std::vector<std::string> keys,
          std::vector<KeyArrow> arrows);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t size() const { return keys_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<DigraphArrow>& arrows() const { return arrows_; }
  const std::string& key(std::uint32_t i) const { return keys_[i]; }
  std::optional<std::uint32_t> index_of(const std::string& key) const;

  // Out-neighbour arrow indices per vertex, in global arrow order.
  std::vector<std::vector<std::size_t>> out_arrows() const;

  bool operator==(const Digraph&) const = default;

  // Equality of vertex and arrow sets (labels included), ignoring the name.
  bool same_structure(const Digraph& other) const {
    return keys_ == other.keys_ && arrows_ == other.arrows_;
  }

 private:
  std::string name_ = "g";
  std::vector<std::string> keys_;
  std::vector<DigraphArrow> arrows_;
};

// Subgraph on `keep`, retaining every arrow with both endpoints kept
// (labels preserved). Unknown keys raise std::invalid_argument naming the
// offending key.
Digraph induced_subgraph(const Digraph& g, const std::set<std::string>& keep);

// Step-d graph on x induced from g: arrow u -> v iff g has a directed walk
// from u to v of length <= d (strict = false) or exactly d (strict = true).
// Walks may pass through vertices outside x; length-0 walks never count, so
// loops arise only from genuine cycles. Arrows carry no labels. d = 0 is an
// error.
Digraph step_d_induced(const Digraph& g, const std::set<std::string>& x,
                       std::size_t d, bool strict);

// Tensor (direct) product: vertices "(k1,k2)", arrow iff both coordinates
// step. Product arrows carry no labels.
Digraph tensor_product(const Digraph& g1, const Digraph& g2);

// Directed cycle on k vertices 0..k-1; k = 1 is a single loop.
Digraph cycle_digraph(std::size_t k);

// Line digraph: one vertex "src>dst>label" per arrow of g, with an arrow
// a -> b whenever dst(a) = src(b).
Digraph line_digraph(const Digraph& g);

enum class Connectivity { kStrong, kWeak };

// Partition of the vertices into strongly or weakly connected components.
// Members of each component are sorted; components are sorted by their
// smallest member key.
std::vector<std::vector<std::string>> connected_components(const Digraph& g,
                                                           Connectivity mode);

// Closed arrow sequence using every arrow exactly once (Hierholzer,
// lexicographically-least unused arrow at each step, starting from the
// smallest non-isolated vertex), as indices into g.arrows(). Absent when the
// graph is not connected on its non-isolated vertices or some vertex has
// in-degree != out-degree. A graph without arrows yields an empty sequence.
std::optional<std::vector<std::size_t>> eulerian_cycle(const Digraph& g);

struct IsoCheck {
  bool ok = false;
  std::string violation;  // first violation found, empty when ok
};

// Checks that the explicit key mapping f (total on g1's vertices, else
// std::invalid_argument) is a digraph isomorphism g1 -> g2, labels ignored.
IsoCheck verify_iso(const Digraph& g1, const Digraph& g2,
                    const std::unordered_map<std::string, std::string>& f);

struct IsoWitness {
  std::vector<std::uint32_t> map;  // g1 vertex index -> g2 vertex index
};

// Backtracking isomorphism search with (in-degree, out-degree,
// 1-neighbourhood degree multiset) pruning; deterministic given vertex
// order. Throws std::runtime_error when either graph exceeds `cap` vertices.
std::optional<IsoWitness> find_iso(const Digraph& g1, const Digraph& g2,
                                   std::size_t cap = kDefaultIsoCap);

}  // namespace slider

#endif  // SLIDER_DIGRAPH_HPP_
