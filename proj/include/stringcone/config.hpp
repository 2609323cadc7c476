#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stringcone {

// Sign/direction choices that the literature leaves ambiguous.  The defaults
// are the ones pinned by the regression suite; the flags exist so a wrong
// guess can be flipped without touching the algorithms.
struct Conventions {
  // Direction of quiver edges of the second kind (ell < k+ < ell+): default
  // is ell -> k, flipping reverses them.
  bool type2_reverse = false;
  // Require Cartan adjacency of the two letters for edges of the second kind.
  bool type2_requires_cartan = true;
  // Subword linear forms: include the reflection of the gap's right endpoint
  // in the partial product (default uses only the letters to the left).
  bool subword_product_shifted = false;
  // Trail endpoints: use the letter itself instead of its diagram involution
  // image for the module and endpoint weights.
  bool trail_plain_endpoints = false;
  // Simply-braided move constraint: compare the leftmost affected root with
  // the letter's own simple root instead of its involution image.
  bool simply_braided_plain_root = false;

  bool operator==(const Conventions&) const = default;
};

struct ScanCaps {
  std::uint64_t word_cap = 500;
  std::uint64_t weyl_cap = 100000;

  bool operator==(const ScanCaps&) const = default;
};

// One run of the command-line tool, serialisable as JSON.
struct RunConfig {
  std::string type;                 // e.g. "A2", "D4"
  std::vector<std::string> words;   // word text, e.g. "2 1 4 2 3 2 4 2 1 2 3 4"
  std::vector<int> letters;         // empty = all letters
  std::string format = "text";      // text | json | csv
  std::string output_path;          // empty = stdout
  Conventions conventions;
  std::uint64_t sample_seed = 0x5eedc0de;
  int box_bound = 4;
  ScanCaps caps;

  bool operator==(const RunConfig&) const = default;
};

}  // namespace stringcone
