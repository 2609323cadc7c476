#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stringcone/config.hpp"
#include "stringcone/lie.hpp"
#include "stringcone/poly.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

// Scanner verdicts for one (word, letter) pair.
struct ScanRecord {
  std::string type;
  Word word;
  int letter = 0;
  bool multiplicity_free = false;
  std::vector<ExponentVec> redundant_forms;
  std::vector<ExponentVec> coeff_gt1_forms;
  bool mf_implies_irredundant = true;     // multiplicity-free implies no redundancy (hard)
  bool no_cross_letter_certificate = true;   // no cross-letter certificate (hard)
  bool redundant_implies_coeff_gt1 = true;  // conjecture direction, reported
  bool coeff_gt1_implies_redundant = true;  // conjecture direction, reported
};

struct ScanOptions {
  std::vector<int> letters;       // empty = all
  std::uint64_t word_cap = 500;
  int threads = 0;                // 0 = STRINGCONE_THREADS or hardware
  Conventions conventions;
};

std::string scan_key(const ScanRecord& r);
std::string scan_record_to_line(const ScanRecord& r);

// Runs the conjecture scanner over an explicit word list, or over the
// lexicographic reduced-word stream capped at word_cap when no list is
// given.  Results come back in deterministic task order; `skip_keys`
// supports resuming.
std::vector<ScanRecord> scan_conjectures(const CartanDatum& c,
                                         std::optional<std::vector<Word>> words,
                                         const ScanOptions& opt,
                                         const std::vector<std::string>& skip_keys = {});

// Appends records as JSON lines, skipping keys already present in the file.
void scan_to_file(const CartanDatum& c, std::optional<std::vector<Word>> words,
                  const ScanOptions& opt, const std::string& path);

}  // namespace stringcone
