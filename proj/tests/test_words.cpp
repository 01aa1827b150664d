#include "slider/word.hpp"

#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace slider;
using test::w;

TEST_CASE("alphabet labels") {
  Alphabet a(3);
  CHECK(a.size() == 3);
  CHECK(a.label(2) == "2");
  CHECK(a.single_char_labels());
  CHECK(a.index_of("1") == Symbol(1));
  CHECK(!a.index_of("x").has_value());

  Alphabet dna({"A", "C", "G", "T"});
  CHECK(dna.index_of("T") == Symbol(3));

  CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a b"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a.b"}), std::invalid_argument);
}

TEST_CASE("word construction and text forms") {
  Word word = w("010", 2);
  CHECK(word.size() == 3);
  CHECK_THROWS_AS(Word({0, 2}, 2), std::invalid_argument);

  Alphabet binary(2);
  CHECK(word_text(word, binary) == "010");
  CHECK(parse_word("010", binary) == word);

  Alphabet wide(12);
  Word ww({0, 11, 3}, 12);
  CHECK(word_text(ww, wide) == "0.11.3");
  CHECK(parse_word("0.11.3", wide) == ww);
  CHECK_THROWS_AS(parse_word("0.99", wide), std::invalid_argument);
}

TEST_CASE("cyclic shift") {
  Alphabet abc({"a", "b", "c"});
  Word word = parse_word("abc", abc);
  CHECK(word_text(cyclic_shift(word, 1), abc) == "bca");
  CHECK(cyclic_shift(word, 0) == word);
  CHECK(cyclic_shift(word, 3) == word);
  CHECK(cyclic_shift(word, -1) == cyclic_shift(word, 2));

  // shift composition, randomized
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 9;
    std::vector<Symbol> syms(n);
    for (auto& s : syms) s = static_cast<Symbol>(rng() % 4);
    Word random_word(syms, 4);
    long long j = static_cast<long long>(rng() % 21) - 10;
    long long k = static_cast<long long>(rng() % 21) - 10;
    CHECK(cyclic_shift(cyclic_shift(random_word, j), k) ==
          cyclic_shift(random_word, j + k));
  }
}

TEST_CASE("debruijn successors") {
  SUBCASE("binary") {
    auto arrows = debruijn_successors(w("010", 2));
    REQUIRE(arrows.size() == 2);
    CHECK(arrows[0].dst == w("100", 2));
    CHECK(arrows[0].label == 0);
    CHECK(arrows[1].dst == w("101", 2));
    CHECK(arrows[1].label == 1);
  }
  SUBCASE("one-letter alphabet loops") {
    auto arrows = debruijn_successors(w("000", 1));
    REQUIRE(arrows.size() == 1);
    CHECK(arrows[0].dst == w("000", 1));
  }
  SUBCASE("ternary, oracle by hand enumeration") {
    // "ab" over {a,b,c}: removing 'a' and appending each letter gives
    // exactly {ba, bb, bc}.
    Alphabet abc({"a", "b", "c"});
    Word word = parse_word("ab", abc);
    auto arrows = debruijn_successors(word);
    REQUIRE(arrows.size() == 3);
    std::set<std::string> dsts;
    for (const auto& arrow : arrows) {
      dsts.insert(word_text(arrow.dst, abc));
    }
    CHECK(dsts == std::set<std::string>{"ba", "bb", "bc"});
  }
}

TEST_CASE("is_debruijn_transition") {
  CHECK(is_debruijn_transition(w("010", 2), w("100", 2)));
  CHECK(is_debruijn_transition(w("010", 2), w("101", 2)));
  CHECK_FALSE(is_debruijn_transition(w("010", 2), w("110", 2)));
  CHECK_THROWS_AS(is_debruijn_transition(w("01", 2), w("011", 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_debruijn_transition(w("01", 2), w("01", 3)),
                  std::invalid_argument);
}

TEST_CASE("successor/transition consistency") {
  // For random words: exactly m successors, every successor passes
  // is_debruijn_transition, and no other word of the same length does.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t m = 1 + rng() % 3;
    std::size_t n = 1 + rng() % 4;
    std::vector<Symbol> syms(n);
    for (auto& s : syms) s = static_cast<Symbol>(rng() % m);
    Word word(syms, m);
    auto arrows = debruijn_successors(word);
    CHECK(arrows.size() == m);
    std::set<Word> dsts;
    for (const auto& arrow : arrows) {
      CHECK(is_debruijn_transition(word, arrow.dst));
      dsts.insert(arrow.dst);
    }
    // enumerate all words of length n, cross-check membership
    std::vector<Symbol> probe(n, 0);
    while (true) {
      Word candidate(probe, m);
      CHECK(is_debruijn_transition(word, candidate) ==
            (dsts.count(candidate) > 0));
      std::size_t i = n;
      while (i > 0 && probe[i - 1] + 1u == m) probe[--i] = 0;
      if (i == 0) break;
      ++probe[i - 1];
    }
  }
}
