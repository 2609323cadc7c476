#pragma once

#include <string>
#include <vector>

#include "stringcone/config.hpp"
#include "stringcone/lie.hpp"

namespace stringcone {

// The D4 worked example.  The two fixtures describe the same computation:
// `d4_example_word()` is the word whose seed reproduces every recorded fact
// of the example (quiver, optimized vertices, single-monomial potentials,
// the 10-step mutation sequence and the 27-term expansion); the "variant"
// is the word string the example is quoted under elsewhere, kept as a
// regression fixture with its own computed values.
Word d4_example_word();          // 2 1 3 4 2 1 3 4 2 1 3 4
Word d4_example_word_variant();  // 2 1 4 2 3 2 4 2 1 2 3 4
std::vector<int> d4_known_mutation_sequence();

struct D4Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct D4Report {
  std::vector<D4Check> checks;
  std::vector<std::string> notes;  // informational, not pass/fail
  bool all_passed() const;
};

// Runs the full worked-example bundle: headline counts, facet counts, the
// Farkas certificate of the redundant form, single-monomial potentials,
// optimized-vertex reports, the known mutation sequence, the comparison
// against the recorded 27-term expansion up to variable relabeling, and the
// regression anchors for the variant word.
D4Report verify_d4(const Conventions& conv = {});

}  // namespace stringcone
