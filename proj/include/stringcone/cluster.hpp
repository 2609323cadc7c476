#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stringcone/config.hpp"
#include "stringcone/lie.hpp"
#include "stringcone/poly.hpp"

namespace stringcone {

// Skew-symmetric exchange data with a frozen mask.  omega[k][l] > 0 means
// omega[k][l] arrows from vertex k+1 to vertex l+1 (0-based storage).
// Arrows between frozen vertices are always erased.
struct Seed {
  int n = 0;
  IntMatrix omega;
  std::vector<char> frozen;
  std::optional<Word> word;  // provenance, when built from a reduced word

  bool mutable_at(int k1) const { return !frozen[k1 - 1]; }
  int pairing(int k1, int l1) const { return omega[k1 - 1][l1 - 1]; }
  bool operator==(const Seed& o) const { return omega == o.omega && frozen == o.frozen; }
};

Seed seed_from_word(const CartanDatum& c, const Word& i, const Conventions& conv = {});
Seed mutate_seed(const Seed& s, int k1);
Seed relabel_seed(const Seed& s, const std::vector<int>& perm);  // perm[old0] = new0

// A-cluster exchange at k: A_k is replaced, everything else kept.
std::vector<LaurentPoly> mutate_a(const std::vector<LaurentPoly>& a, const Seed& s, int k1);

// Expresses a Laurent polynomial on the chart of mu_k(s) in the chart of s.
// Throws convention_violation when the result fails to be Laurent.
LaurentPoly pullback_x(const LaurentPoly& p, const Seed& s, int k1);

// One step of a seed walk: an optional mutation followed by a relabeling
// permutation of the vertex set (empty permutation = identity).
struct MutationStep {
  std::optional<int> vertex;  // 1-based mutable vertex
  std::vector<int> perm;      // perm[old0] = new0; empty = identity
};

enum class TieBreak { LexSmallest, LexLargest };

struct OptSequence {
  Word target;
  MoveSequence moves;
  std::vector<MutationStep> steps;
};

// Deterministic breadth-first search for a word ending in `letter`, with the
// move path translated to mutation steps (3-term move at position k becomes
// a mutation at vertex k-1 followed by the swap of labels k and k+1; a
// 2-term move is the pure swap).
OptSequence opt_sequence(const CartanDatum& c, const Word& i, int letter,
                         const Conventions& conv = {}, TieBreak tb = TieBreak::LexSmallest);

using TraceSink = std::function<void(const std::string&)>;

// The potential summand of `letter` restricted to the chart of the seed of
// word i: pulls the inverse frozen variable back along opt_sequence.
// Result has non-positive exponents, positive integer coefficients, and
// every monomial divisible by the inverse of the letter's frozen variable.
LaurentPoly potential(const CartanDatum& c, const Word& i, int letter,
                      const Conventions& conv = {}, TieBreak tb = TieBreak::LexSmallest,
                      const TraceSink& trace = nullptr);

// Same, but along an explicit move path to the given target word (used for
// path-independence checks).
LaurentPoly potential_along(const CartanDatum& c, const Word& i, int letter,
                            const MoveSequence& moves, const Conventions& conv = {});

// Pulls the inverse of X_{vertex} back along a raw mutation sequence
// (no relabeling); seeds are mutated left to right from seed_from_word(i).
LaurentPoly pullback_inverse_along(const CartanDatum& c, const Word& i,
                                   const std::vector<int>& mutation_vertices, int vertex1,
                                   const Conventions& conv = {});

// c-vectors (columns) and F-polynomials tracked along a mutation walk.
struct PrincipalData {
  IntMatrix cmat;               // cmat[i][j]: row = initial direction, col = vertex
  std::vector<LaurentPoly> F;   // per vertex, in auxiliary variables
  Seed seed;                    // seed after the walk
};

PrincipalData principal_tracking(const CartanDatum& c, const Word& i,
                                 const std::vector<MutationStep>& steps,
                                 const Conventions& conv = {});

// Assembles the potential from the tracked data: the monomial with exponents
// given by the negated c-vector of the optimized frozen vertex times the
// F-polynomials evaluated at inverse variables, raised to the exchange
// pairings at the optimized seed.  Must equal potential().
LaurentPoly potential_via_separation(const CartanDatum& c, const Word& i, int letter,
                                     const Conventions& conv = {},
                                     TieBreak tb = TieBreak::LexSmallest);

// Frozen vertex (1-based position) carrying `letter`, i.e. its last
// occurrence in the word.
int frozen_vertex_of_letter(const Word& i, int letter);

// Frozen vertices k such that every arrow between k and a mutable vertex
// points into k.
std::vector<int> optimized_frozen_vertices(const Seed& s);

}  // namespace stringcone
