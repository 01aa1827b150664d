#ifndef SLIDER_SLIDER_GRAPHS_HPP_
#define SLIDER_SLIDER_GRAPHS_HPP_

// The circular slider graph constructors: full de Bruijn, factorial/induced,
// periodic, transversally Markov, Cayley/Schreier circular sliders, and
// partition-encoding sliders (including the Collatz family). Every output is
// a subgraph of the full de Bruijn graph over its alphabet; arrow labels are
// the replacement letters unless stated otherwise.

#include <cstdint>
#include <set>
#include <vector>

#include "slider/digraph.hpp"
#include "slider/group_table.hpp"
#include "slider/language.hpp"
#include "slider/word.hpp"

namespace slider {

// All m^n words with all de Bruijn transitions (m^{n+1} arrows, labelled by
// the appended letter). Errors when m^{n+1} exceeds the cap.
Digraph full_debruijn(const Alphabet& a, std::size_t n,
                      std::size_t cap = kDefaultSizeCap);
Digraph full_debruijn(std::size_t m, std::size_t n,
                      std::size_t cap = kDefaultSizeCap);

// Induced circular slider graph on an explicit vertex set of words of one
// length: de Bruijn successors filtered by set membership, so the ambient
// graph is never materialised.
Digraph induced_slider(const std::set<Word>& vertices, const Alphabet& a);

// Factorial slider graph of span n: one arrow per (n+1)-factor, from its
// length-n prefix to its length-n suffix, labelled by its last letter.
// Vertices are the n-factors united with the segment endpoints (for an
// explicit spec the words must have length n+1 and supply the arrows).
Digraph factorial_slider(const LanguageSpec& spec, std::size_t n);

// Induced slider graph on the circularly admissible words (tmc/sft/sofic).
Digraph periodic_slider(const LanguageSpec& spec, std::size_t n);

// Full vertex set A^n (or restrict_to), keeping a de Bruijn transition only
// when the discarded-to-appended pair (src[0], label) is admissible.
Digraph trans_markov_slider(const TMCSpec& sigma, std::size_t n,
                            const std::set<Word>* restrict_to = nullptr,
                            std::size_t cap = kDefaultSizeCap);

// Cayley circular slider graph: vertices G^n, arrows
// (g1,...,gn) -> (g2,...,gn,g1*h) for h in K, labelled by h.
Digraph cayley_slider(const GroupTable& g, const std::vector<Symbol>& k,
                      std::size_t n, std::size_t cap = kDefaultSizeCap);

// Schreier circular slider graph: vertices X^n over the point alphabet,
// arrows (x1,...,xn) -> (x2,...,xn,x1.k_j); moves[j][x] = x . k_j.
Digraph schreier_slider(const Alphabet& points,
                        const std::vector<std::vector<Symbol>>& moves,
                        const std::vector<std::string>& k_labels,
                        std::size_t n, std::size_t cap = kDefaultSizeCap);

// A finite closed dynamical system (X, T) with a finite partition: `next` is
// T, `cell` assigns each point its partition cell.
struct PartitionSystem {
  Alphabet alphabet;
  std::vector<std::size_t> next;
  std::vector<Symbol> cell;

  PartitionSystem() = default;
  PartitionSystem(Alphabet a, std::vector<std::size_t> t,
                  std::vector<Symbol> cells);

  std::size_t points() const { return next.size(); }
};

// Symbolic-encoding slider graph: vertices are the alpha_n-names
// (cell(x), cell(Tx), ..., cell(T^{n-1}x)), one arrow per distinct
// alpha_{n+1}-name, labelled by its last letter.
Digraph partition_slider(const PartitionSystem& sys, std::size_t n);

// Collatz encoding on residues mod 2^{n+1} (parity partition); equal to the
// full binary de Bruijn graph of span n. Requires 1 <= n <= 20.
Digraph collatz_slider(std::size_t n);

}  // namespace slider

#endif  // SLIDER_SLIDER_GRAPHS_HPP_
