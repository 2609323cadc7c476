#pragma once

#include <optional>
#include <set>
#include <vector>

#include "stringcone/cluster.hpp"
#include "stringcone/config.hpp"
#include "stringcone/lie.hpp"
#include "stringcone/poly.hpp"

namespace stringcone {

// Move sequence to a word ending in the letter in which every 3-term move
// has the constraint root as the leftmost affected root.  The constraint
// root defaults to the involution image of the letter's simple root (the
// root occupying the last position of any word ending in the letter); the
// plain-root convention flag selects the letter's own root instead.
// Middle-root indices refer to the convex order of the source word; tube
// labels are the mutated vertices of the 3-term moves traced back to the
// source word's vertex labels, and drive the closed-form potential.
struct SimplyBraidedWitness {
  MoveSequence seq;
  std::vector<int> middle_root_indices;  // one per 3-term move, 1-based
  std::vector<int> tube_labels;          // one per 3-term move, 1-based
};

std::optional<SimplyBraidedWitness> simply_braided(const CartanDatum& c, const Word& i,
                                                   int letter, const Conventions& conv = {});

// Closed form of the potential attached to a simply-braided witness; must
// equal potential(c, i, letter).
LaurentPoly tubes_potential(const CartanDatum& c, const Word& i, int letter,
                            const SimplyBraidedWitness& w, const Conventions& conv = {});

struct NiceMachinery {
  std::vector<std::vector<int>> good_enumerations;
  std::vector<Word> nice_words;  // one per good enumeration
};

NiceMachinery nice_machinery(const CartanDatum& c, std::size_t weyl_cap = 100000);
Word nice_word(const CartanDatum& c, const std::vector<int>& enumeration,
               std::size_t weyl_cap = 100000);

struct NiceConeReport {
  bool multiplicity_free_all_letters = false;
  bool literal_system_equals_cone = false;
  std::size_t facet_count = 0;
  std::size_t literal_count = 0;
  std::vector<ExponentVec> facets_not_implied_by_literal;
  std::vector<ExponentVec> literal_not_implied_by_facets;
};

// Compares the cone computed from varsigma against the pairwise-difference
// inequalities t_k >= t_{k'}; documents rather than asserts the comparison.
NiceConeReport nice_cone_report(const CartanDatum& c, const Word& i,
                                const Conventions& conv = {});

// Linear forms from subwords that are reduced words for the minimal coset
// representative; valid for minuscule letters, must equal trop(varsigma).
std::set<ExponentVec> trail_forms_subword(const CartanDatum& c, const Word& i, int letter,
                                          const Conventions& conv = {});

// Weight chain in the minuscule orbit model together with its linear form.
struct Trail {
  std::vector<IntVector> weights;  // N+1 weights in fundamental-coweight coordinates
  std::vector<int> c;              // step exponents, each 0 or 1
  std::vector<int> d;              // derived linear form
};

std::vector<Trail> enumerate_trails(const CartanDatum& c, const Word& i, int letter,
                                    const Conventions& conv = {});

std::set<ExponentVec> trail_forms(const std::vector<Trail>& trails);

}  // namespace stringcone
