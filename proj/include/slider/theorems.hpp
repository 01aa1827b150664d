#ifndef SLIDER_THEOREMS_HPP_
#define SLIDER_THEOREMS_HPP_

// Executable verification of the structural theorems, with human-readable
// reports: the Schreier/de Bruijn identification, its Cayley-slider
// generalisation, the spider tensor factorisation, and the step-d
// connectedness search for periodic slider graphs. Also the de Bruijn
// sequence generator and the brute-force sequence counter.

#include <cstdint>
#include <optional>
#include <string>

#include "slider/digraph.hpp"
#include "slider/group_table.hpp"
#include "slider/language.hpp"
#include "slider/lamplighter.hpp"

namespace slider {

struct TheoremReport {
  std::string theorem;
  std::string params;
  std::string left_name;
  std::size_t left_vertices = 0;
  std::size_t left_arrows = 0;
  std::string right_name;
  std::size_t right_vertices = 0;
  std::size_t right_arrows = 0;
  bool pass = false;
  std::string detail;  // witness summary, or the first violation
  // Spider only: outcome of the find_iso fallback when the explicit map
  // failed. A fallback success is still an overall failure (convention bug).
  std::optional<bool> fallback_pass;

  std::string text() const;
  std::string json_text() const;
};

// Schreier digraph of Z_n wr B on B^n with the walk-right--switch generators
// over all of B, against the full de Bruijn graph of span n over B: checks
// the identity map on vertex keys.
TheoremReport verify_thm_sch(std::size_t n, const GroupTable& b);

// Same with generators restricted to K, against the Cayley circular slider
// graph of (B, K).
TheoremReport verify_thm_schc(std::size_t n, const GroupTable& b,
                              const std::vector<Symbol>& k);

// Cayley digraph of Z_n wr B with walk-right--switch generators over K,
// against cycle_n (x) cayley_slider(B, K, n), via the explicit map
// (a, Phi) -> (a, coset_projection(a, Phi)).
TheoremReport verify_thm_spider(std::size_t n, const GroupTable& b,
                                const std::vector<Symbol>& k);

struct StepSearchResult {
  std::size_t n = 0;
  Connectivity mode = Connectivity::kWeak;
  std::size_t ambient_vertices = 0;
  std::size_t ambient_arrows = 0;
  std::size_t periodic_vertices = 0;
  std::size_t cutoff = 0;
  std::optional<std::size_t> d_min;  // absent: not connected up to cutoff
  std::optional<std::size_t> bound;  // 2*kappa + 2 for primitive chains

  std::string text() const;
  std::string json_text() const;
};

// Least d >= 1 such that the circularly admissible words are step-d
// connected (in the requested mode) inside the ambient factor slider graph,
// searched incrementally up to `cutoff` (default: the ambient vertex count,
// past which reach-within-d is saturated). The 2*kappa + 2 bound is attached
// for primitive TMC specs and for SFT specs via their block recoding.
StepSearchResult minimal_connecting_step(
    const LanguageSpec& spec, std::size_t n, Connectivity mode,
    std::optional<std::size_t> cutoff = std::nullopt);

// Cyclic word of length m^n covering every n-word exactly once: the label
// sequence of the Eulerian cycle of the span n-1 de Bruijn graph (for n = 1,
// the word 01...(m-1)). Deterministic.
Word debruijn_sequence(std::size_t m, std::size_t n,
                       std::size_t cap = kDefaultSizeCap);

// Number of cyclic de Bruijn sequences up to rotation, by exhaustive search
// anchored at the unique 0^n window. Brute force only: requires m^n <= 16.
std::uint64_t count_debruijn_sequences(std::size_t m, std::size_t n);

}  // namespace slider

#endif  // SLIDER_THEOREMS_HPP_
