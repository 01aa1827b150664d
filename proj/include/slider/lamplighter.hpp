#ifndef SLIDER_LAMPLIGHTER_HPP_
#define SLIDER_LAMPLIGHTER_HPP_

// Finite circular lamplighter groups Z_n wr B: wreath multiplication, the
// three generator families, Cayley digraphs, and the right action on B^n
// words with its Schreier digraphs.
//
// Position convention, used consistently by coset_projection and
// schreier_action so that the projection is equivariant: the word read off a
// configuration Phi at lamplighter position a is
//   b[i] = Phi(a + 1 + i mod n),   i = 0..n-1,
// i.e. the lamp states clockwise starting next to the lamplighter.

#include <cstdint>
#include <string>
#include <vector>

#include "slider/digraph.hpp"
#include "slider/group_table.hpp"
#include "slider/word.hpp"

namespace slider {

// An element (a, Phi) of Z_n wr B: lamplighter position a in Z_n and lamp
// configuration Phi as a length-n word over B's element indices.
struct LamplighterElement {
  std::uint32_t a = 0;
  Word phi;

  bool operator==(const LamplighterElement&) const = default;
  auto operator<=>(const LamplighterElement&) const = default;
};

LamplighterElement wreath_identity(std::size_t n, const GroupTable& b);

// (a1, Phi1) * (a2, Phi2) = (a1 + a2, Phi1 . T^{a1} Phi2), where
// (T^a Phi)(x) = Phi(x - a). Throws on mismatched n or B.
LamplighterElement wreath_multiply(std::size_t n, const GroupTable& b,
                                   const LamplighterElement& g1,
                                   const LamplighterElement& g2);

// (-a, T^{-a} Phi^{-1}).
LamplighterElement wreath_inverse(std::size_t n, const GroupTable& b,
                                  const LamplighterElement& g);

enum class GeneratorKind {
  kStandard,        // (+-1, empty) and the switches (0, delta_0^b), b in K
  kWalkRightSwitch, // (1, delta_1^b), b in K
  kSwitchWalkLeft,  // (-1, delta_0^b), b in K
};

struct GeneratorFamily {
  GeneratorKind kind;
  std::vector<Symbol> k;  // subset of B, ascending
};

struct Generator {
  LamplighterElement element;
  std::string label;
};

// The family's elements in a fixed order (walks before switches, K
// ascending). Labels distinguish the +1/-1 walks even when they coincide as
// group elements (n <= 2). Throws when K is empty or not a subset of B.
std::vector<Generator> generator_elements(std::size_t n, const GroupTable& b,
                                          const GeneratorFamily& fam);

// Vertex key "a|<phi text>".
std::string element_key(std::size_t n, const GroupTable& b,
                        const LamplighterElement& g);

// Cayley digraph on all n*|B|^n elements (full enumeration, not BFS: K need
// not generate), arrows g -> g*s labelled by the generator.
Digraph lamplighter_cayley_digraph(std::size_t n, const GroupTable& b,
                                   const GeneratorFamily& fam,
                                   std::size_t cap = kDefaultSizeCap);

// The coset A\G identification (a, Phi) -> T^{-a} Phi as a word over B.
Word coset_projection(std::size_t n, const GroupTable& b,
                      const LamplighterElement& g);

// Right action of (a, Phi) on a word: pointwise multiply by Phi, then shift
// into the lamplighter coordinate system; result[i] = (w.Phi)(i + a).
Word schreier_action(std::size_t n, const GroupTable& b, const Word& w,
                     const LamplighterElement& g);

// Schreier digraph of the action on all |B|^n words.
Digraph lamplighter_schreier_digraph(std::size_t n, const GroupTable& b,
                                     const GeneratorFamily& fam,
                                     std::size_t cap = kDefaultSizeCap);

}  // namespace slider

#endif  // SLIDER_LAMPLIGHTER_HPP_
