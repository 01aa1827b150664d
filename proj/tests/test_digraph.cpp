#include "slider/digraph.hpp"

#include <random>

#include "doctest.h"
#include "slider/slider_graphs.hpp"
#include "test_util.hpp"

using namespace slider;

namespace {

Digraph path_graph(std::size_t k) {
  std::vector<std::string> keys;
  std::vector<KeyArrow> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    keys.push_back("p" + std::to_string(i));
    if (i + 1 < k) {
      arrows.push_back(
          KeyArrow{"p" + std::to_string(i), "p" + std::to_string(i + 1), {}});
    }
  }
  return Digraph("path", std::move(keys), std::move(arrows));
}

}  // namespace

TEST_CASE("digraph construction invariants") {
  Digraph g("g", {"b", "a"}, {{"b", "a", "x"}});
  CHECK(g.keys() == std::vector<std::string>{"a", "b"});
  CHECK(g.arrows().size() == 1);
  CHECK(g.arrows()[0].src == 1);
  CHECK(g.arrows()[0].dst == 0);

  CHECK_THROWS_AS(Digraph("g", {"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph("g", {"a"}, {{"a", "zz", {}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Digraph("g", {"a"}, {{"a", "a", "x"}, {"a", "a", "x"}}),
      std::invalid_argument);
  // same endpoints with distinct labels are allowed
  CHECK_NOTHROW(Digraph("g", {"a"}, {{"a", "a", "x"}, {"a", "a", "y"}}));
}

TEST_CASE("induced subgraph") {
  Digraph b23 = full_debruijn(2, 3);
  SUBCASE("identity") {
    std::set<std::string> all(b23.keys().begin(), b23.keys().end());
    Digraph ind = induced_subgraph(b23, all);
    CHECK(ind.same_structure(b23));
  }
  SUBCASE("golden-mean vertex set, arrow count by independent filter") {
    std::set<std::string> keep{"000", "001", "010", "100", "101"};
    // Oracle: count pairs (u, v) in keep x keep with v a de Bruijn successor
    // of u, straight from the definition.
    Alphabet binary(2);
    std::size_t expected = 0;
    for (const auto& u : keep) {
      for (const auto& arrow : debruijn_successors(parse_word(u, binary))) {
        if (keep.count(word_text(arrow.dst, binary))) ++expected;
      }
    }
    CHECK(expected == 8);  // frozen from the oracle
    Digraph ind = induced_subgraph(b23, keep);
    CHECK(ind.size() == 5);
    CHECK(ind.arrow_count() == expected);
  }
  SUBCASE("empty keep set") {
    Digraph ind = induced_subgraph(b23, {});
    CHECK(ind.size() == 0);
    CHECK(ind.arrow_count() == 0);
  }
  SUBCASE("unknown key errors") {
    CHECK_THROWS_WITH_AS(induced_subgraph(b23, {"0101"}),
                         "induced_subgraph: unknown vertex '0101'",
                         std::invalid_argument);
  }
}

TEST_CASE("step_d_induced") {
  Digraph g = path_graph(5);
  std::set<std::string> x{"p0", "p2", "p4"};
  SUBCASE("d=1 equals the induced subgraph minus labels") {
    Digraph s = step_d_induced(g, x, 1, false);
    CHECK(s.size() == 3);
    CHECK(s.arrow_count() == 0);  // no direct arrows among p0, p2, p4
  }
  SUBCASE("d=2 connects the even path vertices") {
    Digraph s = step_d_induced(g, x, 2, false);
    CHECK(s.arrow_count() == 2);  // p0->p2, p2->p4
  }
  SUBCASE("strict vs cumulative") {
    Digraph cyc = cycle_digraph(4);
    std::set<std::string> pair{"0", "2"};
    Digraph le3 = step_d_induced(cyc, pair, 3, false);
    Digraph eq2 = step_d_induced(cyc, pair, 2, true);
    // cumulative(3) = strict(1) + strict(2) + strict(3) as arrow sets
    std::set<std::pair<std::string, std::string>> cumulative, strict_union;
    for (const auto& a : le3.arrows()) {
      cumulative.insert({le3.key(a.src), le3.key(a.dst)});
    }
    for (std::size_t e = 1; e <= 3; ++e) {
      Digraph eq = step_d_induced(cyc, pair, e, true);
      for (const auto& a : eq.arrows()) {
        strict_union.insert({eq.key(a.src), eq.key(a.dst)});
      }
    }
    CHECK(cumulative == strict_union);
    CHECK(eq2.arrow_count() == 2);  // 0->2 and 2->0 at exactly two steps
  }
  SUBCASE("loops only from genuine cycles") {
    Digraph s = step_d_induced(g, {"p0"}, 4, false);
    CHECK(s.arrow_count() == 0);  // paths never return
    Digraph cyc = cycle_digraph(3);
    Digraph loop = step_d_induced(cyc, {"0"}, 3, false);
    CHECK(loop.arrow_count() == 1);  // the 3-cycle returns at depth 3
  }
  SUBCASE("d=0 rejected") {
    CHECK_THROWS_AS(step_d_induced(g, x, 0, false), std::invalid_argument);
  }
  SUBCASE("intermediate vertices may leave x") {
    // p0 -> p2 passes through p1, which is not in x.
    Digraph s = step_d_induced(g, {"p0", "p2"}, 2, false);
    CHECK(s.arrow_count() == 1);
  }
}

TEST_CASE("tensor product") {
  Digraph b23 = full_debruijn(2, 3);
  SUBCASE("loop identity") {
    Digraph unit = cycle_digraph(1);
    Digraph prod = tensor_product(unit, b23);
    CHECK(prod.size() == b23.size());
    CHECK(prod.arrow_count() == b23.arrow_count());
    auto witness = find_iso(prod, b23);
    CHECK(witness.has_value());
  }
  SUBCASE("counts multiply") {
    Digraph prod = tensor_product(cycle_digraph(3), b23);
    CHECK(prod.size() == 3 * 8);
    CHECK(prod.arrow_count() == 3 * 16);
  }
  SUBCASE("no arrows in a factor, none in the product") {
    Digraph bare("bare", {"u", "v"}, {});
    Digraph prod = tensor_product(bare, b23);
    CHECK(prod.size() == 16);
    CHECK(prod.arrow_count() == 0);
  }
}

TEST_CASE("cycle digraph") {
  Digraph c1 = cycle_digraph(1);
  CHECK(c1.size() == 1);
  CHECK(c1.arrow_count() == 1);
  CHECK(c1.arrows()[0].src == c1.arrows()[0].dst);

  Digraph c3 = cycle_digraph(3);
  CHECK(c3.arrow_count() == 3);
  auto comps = connected_components(c3, Connectivity::kStrong);
  CHECK(comps.size() == 1);

  Digraph c5 = cycle_digraph(5);
  std::vector<std::size_t> in(c5.size(), 0), out(c5.size(), 0);
  for (const auto& a : c5.arrows()) {
    ++out[a.src];
    ++in[a.dst];
  }
  for (std::size_t v = 0; v < c5.size(); ++v) {
    CHECK(in[v] == 1);
    CHECK(out[v] == 1);
  }
}

TEST_CASE("line digraph") {
  SUBCASE("B_2^2 is the line digraph of B_2^1 (search oracle)") {
    Digraph line = line_digraph(full_debruijn(2, 1));
    Digraph b22 = full_debruijn(2, 2);
    auto witness = find_iso(line, b22);
    REQUIRE(witness.has_value());
    // spot check the witness really is an isomorphism
    std::unordered_map<std::string, std::string> f;
    for (std::uint32_t v = 0; v < line.size(); ++v) {
      f[line.key(v)] = b22.key(witness->map[v]);
    }
    CHECK(verify_iso(line, b22, f).ok);
  }
  SUBCASE("cycles are self-line") {
    Digraph c4 = cycle_digraph(4);
    CHECK(find_iso(line_digraph(c4), c4).has_value());
  }
  SUBCASE("no arrows, empty line graph") {
    Digraph bare("bare", {"u"}, {});
    CHECK(line_digraph(bare).size() == 0);
  }
}

TEST_CASE("connectivity") {
  SUBCASE("full de Bruijn graphs are strongly connected") {
    Digraph b23 = full_debruijn(2, 3);
    auto comps = connected_components(b23, Connectivity::kStrong);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 8);
  }
  SUBCASE("arrowless graph splits into singletons") {
    Digraph bare("bare", {"a", "b", "c"}, {});
    CHECK(connected_components(bare, Connectivity::kWeak).size() == 3);
    CHECK(connected_components(bare, Connectivity::kStrong).size() == 3);
  }
  SUBCASE("strong refines weak") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 2 + rng() % 6;
      std::vector<std::string> keys;
      for (std::size_t i = 0; i < n; ++i) keys.push_back(std::to_string(i));
      std::vector<KeyArrow> arrows;
      std::set<std::pair<std::size_t, std::size_t>> seen;
      std::size_t count = rng() % (2 * n);
      for (std::size_t i = 0; i < count; ++i) {
        std::size_t u = rng() % n, v = rng() % n;
        if (seen.insert({u, v}).second) {
          arrows.push_back(
              KeyArrow{std::to_string(u), std::to_string(v), {}});
        }
      }
      Digraph g("random", keys, arrows);
      auto strong = connected_components(g, Connectivity::kStrong);
      auto weak = connected_components(g, Connectivity::kWeak);
      // every strong component sits inside one weak component
      std::unordered_map<std::string, std::size_t> weak_of;
      for (std::size_t c = 0; c < weak.size(); ++c) {
        for (const auto& key : weak[c]) weak_of[key] = c;
      }
      for (const auto& comp : strong) {
        for (const auto& key : comp) {
          CHECK(weak_of[key] == weak_of[comp.front()]);
        }
      }
    }
  }
}

TEST_CASE("eulerian cycle") {
  SUBCASE("cycle graph gives its arrows in order") {
    Digraph c4 = cycle_digraph(4);
    auto cycle = eulerian_cycle(c4);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 4);
    CHECK(*cycle == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("B_2^2 closed trail uses every arrow once") {
    Digraph g = full_debruijn(2, 2);
    auto cycle = eulerian_cycle(g);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == g.arrow_count());
    std::set<std::size_t> used(cycle->begin(), cycle->end());
    CHECK(used.size() == g.arrow_count());
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      const auto& cur = g.arrows()[(*cycle)[i]];
      const auto& next = g.arrows()[(*cycle)[(i + 1) % cycle->size()]];
      CHECK(cur.dst == next.src);
    }
  }
  SUBCASE("unbalanced degrees give absent") {
    Digraph star("star", {"c", "x", "y"}, {{"c", "x", {}}, {"c", "y", {}}});
    CHECK(!eulerian_cycle(star).has_value());
  }
  SUBCASE("disconnected balanced graph gives absent") {
    Digraph two("two", {"a", "b"}, {{"a", "a", {}}, {"b", "b", {}}});
    CHECK(!eulerian_cycle(two).has_value());
  }
  SUBCASE("no arrows gives the empty cycle") {
    Digraph bare("bare", {"a"}, {});
    auto cycle = eulerian_cycle(bare);
    REQUIRE(cycle.has_value());
    CHECK(cycle->empty());
  }
}

TEST_CASE("verify_iso") {
  Digraph c3 = cycle_digraph(3);
  SUBCASE("identity map") {
    std::unordered_map<std::string, std::string> f{
        {"0", "0"}, {"1", "1"}, {"2", "2"}};
    CHECK(verify_iso(c3, c3, f).ok);
  }
  SUBCASE("rotation is also an isomorphism") {
    std::unordered_map<std::string, std::string> f{
        {"0", "1"}, {"1", "2"}, {"2", "0"}};
    CHECK(verify_iso(c3, c3, f).ok);
  }
  SUBCASE("collapsing map reports non-injectivity") {
    std::unordered_map<std::string, std::string> f{
        {"0", "0"}, {"1", "0"}, {"2", "2"}};
    IsoCheck check = verify_iso(c3, c3, f);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("not injective") != std::string::npos);
  }
  SUBCASE("missing vertex in the map throws") {
    std::unordered_map<std::string, std::string> f{{"0", "0"}};
    CHECK_THROWS_AS(verify_iso(c3, c3, f), std::invalid_argument);
  }
  SUBCASE("wrong arrow direction fails") {
    Digraph p2("p", {"a", "b"}, {{"a", "b", {}}});
    Digraph q2("q", {"a", "b"}, {{"b", "a", {}}});
    std::unordered_map<std::string, std::string> id{{"a", "a"}, {"b", "b"}};
    CHECK_FALSE(verify_iso(p2, q2, id).ok);
    std::unordered_map<std::string, std::string> swap{{"a", "b"}, {"b", "a"}};
    CHECK(verify_iso(p2, q2, swap).ok);
  }
}

TEST_CASE("find_iso") {
  SUBCASE("graph vs itself") {
    Digraph g = full_debruijn(2, 3);
    auto witness = find_iso(g, g);
    REQUIRE(witness.has_value());
    std::unordered_map<std::string, std::string> f;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      f[g.key(v)] = g.key(witness->map[v]);
    }
    CHECK(verify_iso(g, g, f).ok);
  }
  SUBCASE("different vertex counts") {
    CHECK(!find_iso(cycle_digraph(3), cycle_digraph(4)).has_value());
  }
  SUBCASE("same counts, different structure") {
    Digraph c6 = cycle_digraph(6);
    Digraph two_triangles(
        "tt", {"0", "1", "2", "3", "4", "5"},
        {{"0", "1", {}}, {"1", "2", {}}, {"2", "0", {}},
         {"3", "4", {}}, {"4", "5", {}}, {"5", "3", {}}});
    CHECK(!find_iso(c6, two_triangles).has_value());
  }
  SUBCASE("cap errors") {
    CHECK_THROWS_AS(find_iso(cycle_digraph(10), cycle_digraph(10), 5),
                    std::runtime_error);
  }
  SUBCASE("verified map implies search success") {
    Digraph line = line_digraph(full_debruijn(2, 1));
    Digraph b22 = full_debruijn(2, 2);
    CHECK(find_iso(line, b22).has_value());
  }
}
