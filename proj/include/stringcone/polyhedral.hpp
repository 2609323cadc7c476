#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stringcone/poly.hpp"
#include "stringcone/rational.hpp"
#include "stringcone/stringcone.hpp"

namespace stringcone {

struct IneqLabel {
  int letter = 0;
  int mono_index = 0;
  Rational coeff = 0;
};

// Labeled homogeneous system { <form, t> >= 0 }.
struct InequalitySystem {
  struct Entry {
    ExponentVec form;
    std::vector<IneqLabel> labels;
  };
  int dim = 0;
  std::vector<Entry> entries;
};

InequalitySystem system_from_string_system(const StringSystem& sys);
InequalitySystem system_from_letter(const StringSystem& sys, int letter);

// Non-negative rational combination expressing a vector inside a conic hull.
struct FarkasCertificate {
  std::map<std::size_t, Rational> weights;  // generator index -> positive weight
};

// Exact phase-1 simplex with Bland's rule; returns a certificate iff
// a0 lies in the conic hull of gens.
std::optional<FarkasCertificate> farkas_member(const ExponentVec& a0,
                                               const std::vector<ExponentVec>& gens);

enum class IneqStatus { Facet, Redundant, Duplicate };

struct RedundancyReport {
  struct Item {
    IneqStatus status;
    std::size_t duplicate_of = 0;            // for Duplicate
    std::optional<FarkasCertificate> cert;   // for Redundant, over `kept`
  };
  std::vector<Item> items;        // parallel to the input entries
  std::vector<std::size_t> kept;  // indices of the facet core
  std::size_t facet_count = 0;
  bool any_cross_letter_certificate = false;
};

// Farkas-based classification: duplicates merged first, an inequality is
// redundant iff its form lies in the conic hull of all the others, and the
// facet core is found by sequential deletion with re-testing.
RedundancyReport classify_redundancy(const InequalitySystem& sys);

InequalitySystem facets(const InequalitySystem& sys);

// Independent oracle: double-description computation of the generator
// representation (lineality + extreme rays); an inequality defines a facet
// iff its tight generators span a subspace of dimension dim(cone) - 1.
struct BruteForceReport {
  std::vector<IneqStatus> status;  // Facet / Redundant / Duplicate, parallel to entries
  int cone_dim = 0;
  std::size_t ray_count = 0;
  std::size_t lineality_dim = 0;
};

BruteForceReport brute_force_redundancy(const InequalitySystem& sys);

// Generator description of { t : forms * t >= 0 } over exact rationals.
struct ConeGenerators {
  std::vector<std::vector<Integer>> lineality;
  std::vector<std::vector<Integer>> rays;
};

ConeGenerators double_description(int dim, const std::vector<ExponentVec>& forms);

struct NewtonVertexReport {
  struct Item {
    ExponentVec exponent;
    Rational coeff;
    bool vertex;
  };
  std::vector<Item> items;
};

// A support point is a vertex of the Newton polytope iff it is not a convex
// combination of the other support points (exact LP feasibility).
NewtonVertexReport newton_vertex_report(const LaurentPoly& p);

}  // namespace stringcone
