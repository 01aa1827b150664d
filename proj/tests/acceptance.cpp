// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.
//
// --write-golden regenerates the committed golden exports (tests/golden).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slider/language.hpp"
#include "slider/lamplighter.hpp"
#include "slider/serialize.hpp"
#include "slider/slider_graphs.hpp"
#include "slider/theorems.hpp"

using namespace slider;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) {
    std::cout << " (" << detail << ")";
  }
  std::cout << "\n";
  if (!ok) ++failures;
}

Word make_word(const std::string& text, std::uint32_t m) {
  std::vector<Symbol> syms;
  for (char c : text) syms.push_back(static_cast<Symbol>(c - '0'));
  return Word(std::move(syms), m);
}

std::set<Word> word_set(const std::vector<std::string>& texts,
                        std::uint32_t m) {
  std::set<Word> out;
  for (const auto& t : texts) out.insert(make_word(t, m));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// S3 as one-line permutations in lexicographic order; element 1 = 021 is a
// transposition.
GroupTable make_s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (Symbol i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) {
        return i;
      }
    }
    return Symbol(6);
  };
  std::vector<Symbol> mult(36);
  for (Symbol a = 0; a < 6; ++a) {
    for (Symbol b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[b][perms[a][x]];
      mult[a * 6 + b] = find(comp);
    }
  }
  return GroupTable(6, std::move(mult));
}

void criterion_1_golden_sets() {
  TMCSpec golden = make_golden_mean_tmc();
  bool ok = factors(golden, 3) ==
                word_set({"000", "001", "010", "100", "101"}, 2) &&
            circular_admissible(golden, 3) ==
                word_set({"000", "001", "010", "100"}, 2);
  report(1, "golden-mean factor and circular word sets at n=3", ok);
}

void criterion_2_golden_counts() {
  Digraph full = full_debruijn(2, 3);
  TMCSpec golden = make_golden_mean_tmc();
  Digraph tm = trans_markov_slider(golden, 3);

  // independent filter oracle for the removed arrows
  Alphabet binary(2);
  std::size_t kept = 0;
  for (const auto& arrow : full.arrows()) {
    Word src = parse_word(full.key(arrow.src), binary);
    Symbol appended = *binary.index_of(*arrow.label);
    if (golden.admissible.count({src.symbols[0], appended})) ++kept;
  }
  bool ok = full.size() == 8 && full.arrow_count() == 16 && tm.size() == 8 &&
            kept == 12 && tm.arrow_count() == 12;
  report(2, "full and transversally Markov golden graphs at n=3", ok,
         std::to_string(full.arrow_count()) + " and " +
             std::to_string(tm.arrow_count()) + " arrows");
}

void criterion_3_chain_example() {
  TMCSpec chain(Alphabet(3), {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
  Digraph g = periodic_slider(chain, 3);
  bool vertices_ok =
      g.keys() == std::vector<std::string>{"000", "012", "120", "201"};
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& arrow : g.arrows()) {
    succ[g.key(arrow.src)].push_back(g.key(arrow.dst));
  }
  bool arrows_ok = g.arrow_count() == 4 &&
                   succ["000"] == std::vector<std::string>{"000"} &&
                   succ["012"] == std::vector<std::string>{"120"} &&
                   succ["120"] == std::vector<std::string>{"201"} &&
                   succ["201"] == std::vector<std::string>{"012"};
  auto comps = connected_components(g, Connectivity::kWeak);
  bool comps_ok = comps.size() == 2 &&
                  comps[0] == std::vector<std::string>{"000"} &&
                  comps[1] == std::vector<std::string>{"012", "120", "201"};
  report(3, "three-letter chain periodic slider graph at n=3",
         vertices_ok && arrows_ok && comps_ok);
}

void criterion_4_thm_sch() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> cases{
      {1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}};
  for (auto [n, order] : cases) {
    TheoremReport r = verify_thm_sch(n, GroupTable::cyclic(order));
    ok = ok && r.pass;
  }
  double elapsed = seconds_since(start);
  report(4, "theorem sch across the (n, |B|) matrix", ok && elapsed < 5.0,
         std::to_string(elapsed).substr(0, 5) + "s");
}

void criterion_5_thm_schc() {
  bool ok = verify_thm_schc(3, GroupTable::cyclic(3), {1}).pass &&
            verify_thm_schc(2, GroupTable::cyclic(4), {1, 3}).pass &&
            verify_thm_schc(2, make_s3(), {1}).pass;
  report(5, "theorem schc for cyclic and nonabelian passive groups", ok);
}

void criterion_6_thm_spider() {
  auto start = std::chrono::steady_clock::now();
  TheoremReport a = verify_thm_spider(3, GroupTable::cyclic(2), {0, 1});
  TheoremReport b = verify_thm_spider(2, GroupTable::cyclic(3), {1});
  double elapsed = seconds_since(start);
  bool ok = a.pass && a.left_vertices == 24 && a.left_arrows == 48 &&
            b.pass && b.left_vertices == 18 && b.left_arrows == 18 &&
            !a.fallback_pass && !b.fallback_pass && elapsed < 5.0;
  report(6, "theorem spider via the explicit coset map", ok,
         std::to_string(elapsed).substr(0, 5) + "s");
}

void criterion_7_thm_connect() {
  bool ok = true;
  std::string strong_notes;
  for (const auto& [name, spec] :
       std::vector<std::pair<std::string, TMCSpec>>{
           {"golden", make_golden_mean_tmc()}, {"kautz3", make_kautz_tmc(3)}}) {
    std::size_t kappa = primitivity_exponent(spec);
    std::size_t bound = 2 * kappa + 2;
    ok = ok && bound == 6;
    for (std::size_t n = 3; n <= 8; ++n) {
      StepSearchResult weak =
          minimal_connecting_step(spec, n, Connectivity::kWeak);
      ok = ok && weak.bound == bound && weak.d_min && *weak.d_min <= bound;
      StepSearchResult strong =
          minimal_connecting_step(spec, n, Connectivity::kStrong);
      strong_notes += name + "/n=" + std::to_string(n) + ":weak=" +
                      std::to_string(weak.d_min.value_or(0)) + ",strong=" +
                      (strong.d_min ? std::to_string(*strong.d_min) : "-") +
                      " ";
    }
  }
  report(7, "step-d connectedness within the 2k+2 bound", ok);
  std::cout << "       strong-mode record (not asserted): " << strong_notes
            << "\n";
}

void criterion_8_sequences() {
  bool coverage_ok = true;
  for (std::size_t n = 1; n <= 12; ++n) {
    Word seq = debruijn_sequence(2, n);
    std::size_t length = std::size_t(1) << n;
    std::set<std::vector<Symbol>> windows;
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<Symbol> window(n);
      for (std::size_t j = 0; j < n; ++j) {
        window[j] = seq.symbols[(i + j) % length];
      }
      windows.insert(window);
    }
    coverage_ok = coverage_ok && seq.size() == length &&
                  windows.size() == length;
  }
  bool counts_ok = true;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::uint64_t closed_form = std::uint64_t(1)
                                << ((std::size_t(1) << (n - 1)) - n);
    counts_ok =
        counts_ok && count_debruijn_sequences(2, n) == closed_form;
  }
  report(8, "de Bruijn sequence coverage (n<=12) and counts (n=2,3,4)",
         coverage_ok && counts_ok);
}

void criterion_9_collatz() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 10; ++n) {
    ok = ok && collatz_slider(n).same_structure(full_debruijn(2, n));
  }
  double elapsed = seconds_since(start);
  report(9, "collatz encodings equal the full binary graphs for n=1..10",
         ok && elapsed < 5.0, std::to_string(elapsed).substr(0, 5) + "s");
}

void criterion_10_structural() {
  bool line_ok = true;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      Digraph base = full_debruijn(m, n);
      Digraph line = line_digraph(base);
      Digraph up = full_debruijn(m, n + 1);
      Alphabet a(m);
      std::unordered_map<std::string, std::string> f;
      for (const auto& arrow : base.arrows()) {
        Word word = parse_word(base.key(arrow.src), a);
        std::vector<Symbol> syms = word.symbols;
        syms.push_back(*a.index_of(*arrow.label));
        f[base.key(arrow.src) + ">" + base.key(arrow.dst) + ">" +
          *arrow.label] = word_text(Word(syms, word.alphabet_size), a);
      }
      line_ok = line_ok && verify_iso(line, up, f).ok;
    }
  }

  bool kautz_ok = true;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t expected = m;
      for (std::size_t i = 1; i < n; ++i) expected *= m - 1;
      kautz_ok = kautz_ok &&
                 factorial_slider(make_kautz_tmc(m), n).size() == expected;
    }
  }

  // A 2n+2 prefix misses factors from n = 8 on (the Fibonacci word's
  // recurrence function grows faster); 4n+8 is enough for n <= 20 and the
  // doubled prefix asserts that empirically.
  bool rauzy_ok = true;
  std::vector<Word> fib_rules = {make_word("01", 2), make_word("0", 2)};
  for (std::size_t n = 1; n <= 20; ++n) {
    Word prefix = substitution_fixed_point(fib_rules, 0, 4 * n + 8);
    Word longer = substitution_fixed_point(fib_rules, 0, 8 * n + 16);
    std::size_t count =
        factorial_slider(FiniteWordSpec(Alphabet(2), prefix), n).size();
    std::size_t count_longer =
        factorial_slider(FiniteWordSpec(Alphabet(2), longer), n).size();
    rauzy_ok = rauzy_ok && count == n + 1 && count_longer == count;
  }

  // the Schreier action is a right action: exhaustive over Z_3 wr Z_2
  bool action_ok = true;
  {
    const std::size_t n = 3;
    GroupTable z2 = GroupTable::cyclic(2);
    std::vector<LamplighterElement> elements;
    std::vector<Word> words;
    for (unsigned bits = 0; bits < 8; ++bits) {
      Word phi({Symbol(bits >> 2 & 1), Symbol(bits >> 1 & 1),
                Symbol(bits & 1)},
               2);
      words.push_back(phi);
      for (std::uint32_t a = 0; a < n; ++a) {
        elements.push_back(LamplighterElement{a, phi});
      }
    }
    for (const Word& word : words) {
      for (const auto& g1 : elements) {
        Word once = schreier_action(n, z2, word, g1);
        for (const auto& g2 : elements) {
          action_ok = action_ok &&
                      schreier_action(n, z2, once, g2) ==
                          schreier_action(n, z2, word,
                                          wreath_multiply(n, z2, g1, g2));
        }
      }
    }
  }

  // wreath group axioms, exhaustive for n <= 3 and |B| <= 3
  bool axioms_ok = true;
  for (std::size_t n = 1; n <= 3 && axioms_ok; ++n) {
    for (std::size_t order = 1; order <= 3 && axioms_ok; ++order) {
      GroupTable b = GroupTable::cyclic(order);
      std::vector<LamplighterElement> elements;
      std::vector<Symbol> cur(n, 0);
      while (true) {
        for (std::uint32_t a = 0; a < n; ++a) {
          elements.push_back(LamplighterElement{
              a, Word(cur, static_cast<std::uint32_t>(order))});
        }
        std::size_t i = n;
        while (i > 0 && cur[i - 1] + 1u == order) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
      }
      LamplighterElement e = wreath_identity(n, b);
      for (const auto& x : elements) {
        axioms_ok = axioms_ok && wreath_multiply(n, b, x, e) == x &&
                    wreath_multiply(n, b, e, x) == x;
        LamplighterElement inv = wreath_inverse(n, b, x);
        axioms_ok = axioms_ok && wreath_multiply(n, b, x, inv) == e &&
                    wreath_multiply(n, b, inv, x) == e;
      }
      for (const auto& x : elements) {
        for (const auto& y : elements) {
          LamplighterElement xy = wreath_multiply(n, b, x, y);
          for (const auto& z : elements) {
            axioms_ok = axioms_ok &&
                        wreath_multiply(n, b, xy, z) ==
                            wreath_multiply(n, b, x,
                                            wreath_multiply(n, b, y, z));
          }
          if (!axioms_ok) break;
        }
        if (!axioms_ok) break;
      }
    }
  }

  report(10, "structural property suite", line_ok && kautz_ok && rauzy_ok &&
                                              action_ok && axioms_ok,
         std::string(line_ok ? "" : "line ") + (kautz_ok ? "" : "kautz ") +
             (rauzy_ok ? "" : "rauzy ") + (action_ok ? "" : "action ") +
             (axioms_ok ? "" : "axioms"));
}

// The graphs pinned by the golden exports, with stable file stems.
std::vector<std::pair<std::string, Digraph>> golden_graphs() {
  TMCSpec golden = make_golden_mean_tmc();
  TMCSpec chain(Alphabet(3), {{0, 0}, {0, 1}, {1, 2}, {2, 0}});
  auto sigma3 = factors(golden, 3);
  auto circ3 = circular_admissible(golden, 3);
  std::vector<Word> fib_rules = {make_word("01", 2), make_word("0", 2)};
  Word fib_prefix = substitution_fixed_point(fib_rules, 0, 13);
  GroupTable z2 = GroupTable::cyclic(2);
  GroupTable z3 = GroupTable::cyclic(3);
  GeneratorFamily wrs_all{GeneratorKind::kWalkRightSwitch, {0, 1}};

  std::vector<std::pair<std::string, Digraph>> out;
  out.emplace_back("empty", Digraph());
  out.emplace_back("cycle_2", cycle_digraph(2));
  out.emplace_back("debruijn_2_3", full_debruijn(2, 3));
  out.emplace_back("golden_tm_3", trans_markov_slider(golden, 3));
  out.emplace_back("golden_tm_3_sigma",
                   trans_markov_slider(golden, 3, &sigma3));
  out.emplace_back("golden_tm_3_circular",
                   trans_markov_slider(golden, 3, &circ3));
  out.emplace_back("golden_periodic_3", periodic_slider(golden, 3));
  out.emplace_back("chain3_periodic_3", periodic_slider(chain, 3));
  out.emplace_back("kautz_3_2", [&] {
    Digraph g = factorial_slider(make_kautz_tmc(3), 2);
    g.set_name("kautz_3_2");
    return g;
  }());
  out.emplace_back("rauzy_fib_3", [&] {
    Digraph g = factorial_slider(FiniteWordSpec(Alphabet(2), fib_prefix), 3);
    g.set_name("rauzy_3");
    return g;
  }());
  out.emplace_back("lamp_schreier_z2_n3",
                   lamplighter_schreier_digraph(3, z2, wrs_all));
  out.emplace_back("lamp_cayley_z2_n3",
                   lamplighter_cayley_digraph(3, z2, wrs_all));
  out.emplace_back("spider_3_z2",
                   tensor_product(cycle_digraph(3),
                                  cayley_slider(z2, {0, 1}, 3)));
  out.emplace_back("cayley_slider_z3_k1_n3", cayley_slider(z3, {1}, 3));
  out.emplace_back("collatz_3", collatz_slider(3));
  out.emplace_back("line_debruijn_2_1", line_digraph(full_debruijn(2, 1)));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_goldens(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [stem, graph] : golden_graphs()) {
    std::ofstream(dir / (stem + ".dot"), std::ios::binary)
        << export_dot(graph);
    std::ofstream(dir / (stem + ".json"), std::ios::binary)
        << export_json(graph);
  }
  std::ofstream(dir / "sequence_2_3.txt", std::ios::binary)
      << word_text(debruijn_sequence(2, 3), Alphabet(2)) << "\n";
  std::cout << "wrote golden files to " << dir << "\n";
}

void criterion_11_goldens(const std::filesystem::path& dir) {
  bool ok = true;
  std::string first_bad;
  for (const auto& [stem, graph] : golden_graphs()) {
    std::string dot = export_dot(graph);
    std::string json = export_json(graph);
    // determinism across repeated export
    bool stable = dot == export_dot(graph) && json == export_json(graph);
    bool matches = dot == read_file(dir / (stem + ".dot")) &&
                   json == read_file(dir / (stem + ".json"));
    if (!(stable && matches) && first_bad.empty()) first_bad = stem;
    ok = ok && stable && matches;
  }
  std::string seq = word_text(debruijn_sequence(2, 3), Alphabet(2)) + "\n";
  if (seq != read_file(dir / "sequence_2_3.txt")) {
    ok = false;
    if (first_bad.empty()) first_bad = "sequence_2_3";
  }
  report(11, "golden DOT/JSON exports are byte-identical", ok, first_bad);
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path golden_dir = SLIDER_GOLDEN_DIR;
  if (argc > 1 && std::string(argv[1]) == "--write-golden") {
    if (argc > 2) golden_dir = argv[2];
    write_goldens(golden_dir);
    return 0;
  }

  criterion_1_golden_sets();
  criterion_2_golden_counts();
  criterion_3_chain_example();
  criterion_4_thm_sch();
  criterion_5_thm_schc();
  criterion_6_thm_spider();
  criterion_7_thm_connect();
  criterion_8_sequences();
  criterion_9_collatz();
  criterion_10_structural();
  criterion_11_goldens(golden_dir);

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criterion(s) failed\n";
  return 1;
}
