#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stringcone/cluster.hpp"
#include "stringcone/config.hpp"
#include "stringcone/lie.hpp"
#include "stringcone/poly.hpp"

namespace stringcone {

// The unimodular monomial torus map from string coordinates to the cluster
// chart of a word: X_k = prod_l x_l^{E[k][l]}.
struct CAMatrix {
  IntMatrix E;
};

CAMatrix ca_matrix(const CartanDatum& c, const Word& i);
Integer det(const IntMatrix& m);

// varsigma = potential composed with the torus map; positive integer
// coefficients; equals x_N exactly when the word ends in the letter.
LaurentPoly varsigma(const CartanDatum& c, const Word& i, int letter,
                     const Conventions& conv = {});

struct StringIneq {
  int letter;
  int mono_index;   // position in the canonical term order of the letter's polynomial
  Rational coeff;   // merged coefficient annotation
  ExponentVec form; // <form, t> >= 0
};

struct LetterData {
  LaurentPoly poly;
  TropicalForm trop;
  std::vector<StringIneq> ineqs;
};

// Per-letter inequality description of the string cone of a word.
struct StringSystem {
  Word word;
  int vars = 0;
  std::map<int, LetterData> letters;
};

StringSystem string_system(const CartanDatum& c, const Word& i, const Conventions& conv = {});

bool cone_contains(const StringSystem& sys, const std::vector<long long>& t);

// Lattice points of the cone inside the box [0,B]^N; exhaustive for N <= 6,
// seeded random sampling above that.
std::vector<std::vector<long long>> cone_lattice_points(const StringSystem& sys, int box_bound,
                                                        std::uint64_t seed = 0x5eedc0de,
                                                        std::size_t max_points = 4096);

struct PsiStep {
  MoveKind kind;
  int pos;  // 1-based
};

// Piecewise-linear transition map between the string cones of two words,
// composed from elementary steps (each step is an involution).
struct PiecewiseLinearMap {
  int vars = 0;
  std::vector<PsiStep> steps;

  std::vector<long long> apply(std::vector<long long> t) const;
  PiecewiseLinearMap inverse() const;
};

PiecewiseLinearMap psi(const CartanDatum& c, const Word& from, const Word& to);

struct PsiCompatReport {
  std::size_t on_cone_checked = 0;
  std::size_t on_cone_failures = 0;
  std::size_t image_membership_failures = 0;
  std::size_t off_cone_checked = 0;
  std::size_t off_cone_failures = 0;
  std::vector<std::vector<long long>> failure_points;
};

// Checks the defining identity of varsigma on sample points: for t in the
// cone of `from`, trop(varsigma_to)(psi(t)) must equal trop(varsigma_from)(t).
PsiCompatReport psi_compat_check(const CartanDatum& c, const Word& from, const Word& to,
                                 int letter, const std::vector<std::vector<long long>>& points,
                                 const Conventions& conv = {});

}  // namespace stringcone
