#include "stringcone/scan.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "stringcone/jsonio.hpp"
#include "stringcone/polyhedral.hpp"
#include "stringcone/stringcone.hpp"

namespace stringcone {

std::string scan_key(const ScanRecord& r) {
  return r.type + ":" + word_str(r.word) + ":" + std::to_string(r.letter);
}

std::string scan_record_to_line(const ScanRecord& r) {
  json j;
  j["key"] = scan_key(r);
  j["type"] = r.type;
  j["word"] = r.word.letters;
  j["letter"] = r.letter;
  j["multiplicity_free"] = r.multiplicity_free;
  j["redundant_forms"] = r.redundant_forms;
  j["coeff_gt1_forms"] = r.coeff_gt1_forms;
  j["mf_implies_irredundant"] = r.mf_implies_irredundant;
  j["no_cross_letter_certificate"] = r.no_cross_letter_certificate;
  j["redundant_implies_coeff_gt1"] = r.redundant_implies_coeff_gt1;
  j["coeff_gt1_implies_redundant"] = r.coeff_gt1_implies_redundant;
  return j.dump();
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STRINGCONE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<ScanRecord> scan_word(const CartanDatum& c, const Word& w, const ScanOptions& opt) {
  const StringSystem sys = string_system(c, w, opt.conventions);
  const InequalitySystem full = system_from_string_system(sys);
  const RedundancyReport rep = classify_redundancy(full);

  std::vector<int> letters = opt.letters;
  if (letters.empty())
    for (int l = 1; l <= c.n(); ++l) letters.push_back(l);

  std::vector<ScanRecord> out;
  for (int letter : letters) {
    ScanRecord r;
    r.type = type_string(c);
    r.word = w;
    r.letter = letter;
    const LetterData& data = sys.letters.at(letter);
    r.multiplicity_free = is_multiplicity_free(data.poly);
    for (std::size_t e = 0; e < full.entries.size(); ++e) {
      bool mine = false;
      Rational coeff = 0;
      for (const auto& lab : full.entries[e].labels)
        if (lab.letter == letter) {
          mine = true;
          coeff = lab.coeff;
        }
      if (!mine) continue;
      const bool redundant = rep.items[e].status == IneqStatus::Redundant;
      if (redundant) r.redundant_forms.push_back(full.entries[e].form);
      if (coeff > 1) r.coeff_gt1_forms.push_back(full.entries[e].form);
      if (redundant && coeff <= 1) r.redundant_implies_coeff_gt1 = false;
      if (coeff > 1 && !redundant) r.coeff_gt1_implies_redundant = false;
    }
    r.mf_implies_irredundant = !(r.multiplicity_free && !r.redundant_forms.empty());
    r.no_cross_letter_certificate = !rep.any_cross_letter_certificate;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> scan_conjectures(const CartanDatum& c,
                                         std::optional<std::vector<Word>> maybe_words,
                                         const ScanOptions& opt,
                                         const std::vector<std::string>& skip_keys) {
  const std::vector<Word> words =
      maybe_words ? std::move(*maybe_words)
                  : reduced_words(c, longest_element(c),
                                  opt.word_cap ? std::optional<std::size_t>(opt.word_cap)
                                               : std::nullopt);
  const std::set<std::string> skip(skip_keys.begin(), skip_keys.end());

  const int threads = resolve_threads(opt.threads);
  std::vector<std::vector<ScanRecord>> results(words.size());
  std::atomic<std::size_t> cursor{0};
  std::vector<std::string> errors;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t t = cursor.fetch_add(1);
      if (t >= words.size()) return;
      try {
        results[t] = scan_word(c, words[t], opt);
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.push_back(word_str(words[t]) + ": " + ex.what());
      }
    }
  };
  if (threads <= 1 || words.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!errors.empty()) throw convention_violation("scan failed: " + errors.front());

  std::vector<ScanRecord> out;
  for (auto& group : results)
    for (auto& r : group) {
      if (skip.count(scan_key(r))) continue;
      out.push_back(std::move(r));
    }
  return out;
}

void scan_to_file(const CartanDatum& c, std::optional<std::vector<Word>> words,
                  const ScanOptions& opt, const std::string& path) {
  std::vector<std::string> skip;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        skip.push_back(json::parse(line).at("key").get<std::string>());
      } catch (const std::exception&) {
        // Ignore malformed lines; they will be recomputed.
      }
    }
  }
  const auto records = scan_conjectures(c, std::move(words), opt, skip);
  std::ofstream out(path, std::ios::app);
  if (!out) throw invalid_input("cannot open scan output file: " + path);
  for (const auto& r : records) out << scan_record_to_line(r) << "\n";
}

}  // namespace stringcone
