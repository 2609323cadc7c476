// Command-line interface for exact string-cone computations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal convention violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "stringcone/jsonio.hpp"
#include "stringcone/scan.hpp"
#include "stringcone/verify_d4.hpp"

using namespace stringcone;

namespace {

struct Cli {
  RunConfig cfg;
  std::string config_path;
  bool dump_config = false;
  bool trace = false;
  std::string from_text, to_text, point_text, of_text, scan_out, words_file;
  int letter = 0;
  std::uint64_t limit = 0;
  int threads = 0;
};

std::ostream& out_stream(const Cli& cli, std::ofstream& file) {
  if (cli.cfg.output_path.empty()) return std::cout;
  file.open(cli.cfg.output_path);
  if (!file) throw invalid_input("cannot open output file: " + cli.cfg.output_path);
  return file;
}

CartanDatum datum(const Cli& cli) {
  if (cli.cfg.type.empty()) throw invalid_input("--type is required");
  return cartan_matrix(cli.cfg.type);
}

Word single_word(const Cli& cli) {
  if (cli.cfg.words.empty()) throw invalid_input("--word is required");
  return parse_word(cli.cfg.words.front());
}

void print_poly(const Cli& cli, const LaurentPoly& p) {
  std::ofstream file;
  std::ostream& out = out_stream(cli, file);
  if (cli.cfg.format == "json")
    out << poly_to_json(p).dump(2) << "\n";
  else
    out << p.str() << "\n";
}

void add_common(CLI::App* cmd, Cli& cli, bool with_word = true, bool with_letter = false) {
  cmd->add_option("--type", cli.cfg.type, "Cartan type, e.g. A2, D4, E6")->required();
  if (with_word) cmd->add_option("--word", [&cli](const std::vector<std::string>& v) {
    cli.cfg.words = v;
    return true;
  }, "reduced word, e.g. \"2 1 4 2 3 2 4 2 1 2 3 4\"")->required()->expected(1);
  if (with_letter) cmd->add_option("--letter", cli.letter, "node label")->required();
  cmd->add_option("--format", cli.cfg.format, "text | json | csv");
  cmd->add_option("--out", cli.cfg.output_path, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"Exact string cone computations from cluster potentials"};
  app.require_subcommand(1);
  app.add_option("--config", cli.config_path, "load a JSON run configuration");
  app.add_flag("--dump-config", cli.dump_config, "print the effective configuration and exit");
  app.add_flag("--type2-reverse", cli.cfg.conventions.type2_reverse,
               "flip the direction of second-kind quiver edges");
  bool no_cartan_filter = false;
  app.add_flag("--no-type2-cartan-filter", no_cartan_filter,
               "drop the Cartan adjacency requirement for second-kind edges");
  app.add_flag("--subword-shifted", cli.cfg.conventions.subword_product_shifted,
               "shift the partial product in the subword oracle");
  app.add_flag("--trail-plain", cli.cfg.conventions.trail_plain_endpoints,
               "use plain trail endpoints instead of the involution image");
  app.add_flag("--simply-braided-plain", cli.cfg.conventions.simply_braided_plain_root,
               "constrain simply-braided moves by the letter's own root");
  app.add_option("--sample-seed", cli.cfg.sample_seed, "seed for cone point sampling");
  app.add_option("--box", cli.cfg.box_bound, "box bound for cone point sampling");

  CLI::App* words = app.add_subcommand("words", "enumerate reduced words");
  words->add_option("--type", cli.cfg.type)->required();
  words->add_option("--limit", cli.limit, "stop after this many words");
  words->add_option("--of", cli.of_text, "element given by a word (default: longest element)");
  words->add_option("--out", cli.cfg.output_path);

  CLI::App* pot = app.add_subcommand("potential", "potential summand on a word's chart");
  add_common(pot, cli, true, true);
  pot->add_flag("--trace", cli.trace, "log one line per seed-walk step to stderr");

  CLI::App* vs = app.add_subcommand("varsigma", "string-cone polynomial of a letter");
  add_common(vs, cli, true, true);

  CLI::App* cone = app.add_subcommand("cone", "full string cone inequality system");
  add_common(cone, cli);

  CLI::App* fac = app.add_subcommand("facets", "redundancy classification of the cone");
  add_common(fac, cli);
  fac->add_option("--letter", cli.letter, "restrict to one letter's subsystem");

  CLI::App* psi_cmd = app.add_subcommand("psi", "map a point between two words' cones");
  psi_cmd->add_option("--type", cli.cfg.type)->required();
  psi_cmd->add_option("--from", cli.from_text)->required();
  psi_cmd->add_option("--to", cli.to_text)->required();
  psi_cmd->add_option("--point", cli.point_text)->required();

  CLI::App* trails = app.add_subcommand("trails", "minuscule-letter trail oracle dump");
  add_common(trails, cli, true, true);

  CLI::App* scan = app.add_subcommand("scan", "conjecture scanner over reduced words");
  scan->add_option("--type", cli.cfg.type)->required();
  scan->add_option("--cap", cli.cfg.caps.word_cap, "word cap for enumeration");
  scan->add_option("--letters", cli.cfg.letters, "letters to report (default all)");
  scan->add_option("--words-file", cli.words_file, "file with one word per line");
  scan->add_option("--threads", cli.threads, "worker threads (default STRINGCONE_THREADS)");
  scan->add_option("--out", cli.scan_out, "append JSON lines here (resumable)");

  CLI::App* vd4 = app.add_subcommand("verify-d4", "run the D4 worked-example bundle");
  vd4->add_option("--out", cli.cfg.output_path);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!cli.config_path.empty()) {
      std::ifstream in(cli.config_path);
      if (!in) throw invalid_input("cannot open config file: " + cli.config_path);
      json j;
      in >> j;
      RunConfig loaded = run_config_from_json(j);
      // Command-line type/word settings win over the file.
      if (cli.cfg.type.empty()) cli.cfg.type = loaded.type;
      if (cli.cfg.words.empty()) cli.cfg.words = loaded.words;
      cli.cfg.conventions = loaded.conventions;
      cli.cfg.sample_seed = loaded.sample_seed;
      cli.cfg.box_bound = loaded.box_bound;
      cli.cfg.caps = loaded.caps;
    }
    if (no_cartan_filter) cli.cfg.conventions.type2_requires_cartan = false;
    if (cli.dump_config) {
      std::cout << run_config_to_json(cli.cfg).dump(2) << "\n";
      return 0;
    }
    const Conventions& conv = cli.cfg.conventions;

    if (words->parsed()) {
      const CartanDatum c = datum(cli);
      const WeylElement w =
          cli.of_text.empty() ? longest_element(c) : word_props(c, parse_word(cli.of_text)).element;
      std::ofstream file;
      std::ostream& out = out_stream(cli, file);
      std::uint64_t count = 0;
      reduced_words(c, w, [&](const Word& word) {
        out << word_str(word) << "\n";
        ++count;
        return cli.limit == 0 || count < cli.limit;
      });
    } else if (pot->parsed()) {
      const CartanDatum c = datum(cli);
      TraceSink sink = nullptr;
      if (cli.trace) sink = [](const std::string& line) { std::cerr << line << "\n"; };
      print_poly(cli, potential(c, single_word(cli), cli.letter, conv, TieBreak::LexSmallest, sink));
    } else if (vs->parsed()) {
      const CartanDatum c = datum(cli);
      print_poly(cli, varsigma(c, single_word(cli), cli.letter, conv));
    } else if (cone->parsed()) {
      const CartanDatum c = datum(cli);
      const StringSystem sys = string_system(c, single_word(cli), conv);
      std::ofstream file;
      std::ostream& out = out_stream(cli, file);
      if (cli.cfg.format == "json") {
        out << string_system_to_json(sys).dump(2) << "\n";
      } else {
        for (const auto& [letter, data] : sys.letters) {
          out << "letter " << letter << ": " << data.poly.str() << "\n";
          for (const auto& ineq : data.ineqs) {
            out << "  ";
            for (std::size_t k = 0; k < ineq.form.size(); ++k) {
              if (k) out << " ";
              out << ineq.form[k];
            }
            out << "  >= 0\n";
          }
        }
      }
    } else if (fac->parsed()) {
      const CartanDatum c = datum(cli);
      const StringSystem sys = string_system(c, single_word(cli), conv);
      const InequalitySystem isys =
          cli.letter ? system_from_letter(sys, cli.letter) : system_from_string_system(sys);
      const RedundancyReport rep = classify_redundancy(isys);
      std::ofstream file;
      std::ostream& out = out_stream(cli, file);
      if (cli.cfg.format == "json") {
        out << redundancy_report_to_json(isys, rep).dump(2) << "\n";
      } else if (cli.cfg.format == "csv") {
        out << redundancy_report_to_csv(isys, rep);
      } else {
        std::size_t redundant = 0, dup = 0;
        for (const auto& item : rep.items) {
          if (item.status == IneqStatus::Redundant) ++redundant;
          if (item.status == IneqStatus::Duplicate) ++dup;
        }
        out << rep.facet_count << " facets, " << redundant << " redundant, " << dup
            << " duplicate of " << isys.entries.size() << " inequalities\n";
      }
    } else if (psi_cmd->parsed()) {
      const CartanDatum c = datum(cli);
      const PiecewiseLinearMap map = psi(c, parse_word(cli.from_text), parse_word(cli.to_text));
      const Word pt = parse_word(cli.point_text);
      std::vector<long long> t(pt.letters.begin(), pt.letters.end());
      const auto image = map.apply(t);
      for (std::size_t k = 0; k < image.size(); ++k) {
        if (k) std::cout << " ";
        std::cout << image[k];
      }
      std::cout << "\n";
    } else if (trails->parsed()) {
      const CartanDatum c = datum(cli);
      const auto ts = enumerate_trails(c, single_word(cli), cli.letter, conv);
      std::ofstream file;
      std::ostream& out = out_stream(cli, file);
      out << trails_to_json(ts).dump(2) << "\n";
    } else if (scan->parsed()) {
      const CartanDatum c = datum(cli);
      ScanOptions opt;
      opt.letters = cli.cfg.letters;
      opt.word_cap = cli.cfg.caps.word_cap;
      opt.threads = cli.threads;
      opt.conventions = conv;
      std::optional<std::vector<Word>> word_list;
      if (!cli.words_file.empty()) {
        std::ifstream in(cli.words_file);
        if (!in) throw invalid_input("cannot open words file: " + cli.words_file);
        word_list.emplace();
        std::string line;
        while (std::getline(in, line))
          if (!line.empty()) word_list->push_back(parse_word(line));
      }
      if (!cli.scan_out.empty()) {
        scan_to_file(c, std::move(word_list), opt, cli.scan_out);
      } else {
        for (const auto& r : scan_conjectures(c, std::move(word_list), opt))
          std::cout << scan_record_to_line(r) << "\n";
      }
    } else if (vd4->parsed()) {
      const D4Report rep = verify_d4(cli.cfg.conventions);
      std::ofstream file;
      std::ostream& out = out_stream(cli, file);
      for (const auto& chk : rep.checks) {
        out << (chk.passed ? "[PASS] " : "[FAIL] ") << chk.name;
        if (!chk.detail.empty()) out << "  -- " << chk.detail;
        out << "\n";
      }
      for (const auto& note : rep.notes) out << "[NOTE] " << note << "\n";
      if (!rep.all_passed()) return 1;
    }
  } catch (const convention_violation& ex) {
    std::cerr << "convention violation: " << ex.what() << "\n";
    return 3;
  } catch (const not_divisible& ex) {
    std::cerr << "convention violation: " << ex.what() << "\n";
    return 3;
  } catch (const error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
