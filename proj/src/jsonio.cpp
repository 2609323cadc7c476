#include "stringcone/jsonio.hpp"

#include <sstream>

namespace stringcone {

json poly_to_json(const LaurentPoly& p) {
  json j;
  j["vars"] = p.vars();
  j["chart"] = p.chart() == Chart::X ? "X" : "x";
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["coeff"] = rational_str(c);
    t["exp"] = e;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  const int vars = j.at("vars").get<int>();
  const std::string chart = j.at("chart").get<std::string>();
  if (chart != "X" && chart != "x") throw invalid_input("unknown chart tag: " + chart);
  LaurentPoly p(vars, chart == "X" ? Chart::X : Chart::x);
  for (const auto& t : j.at("terms")) {
    const ExponentVec e = t.at("exp").get<ExponentVec>();
    p.add_term(e, parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

json seed_to_json(const Seed& s) {
  json j;
  j["n"] = s.n;
  j["omega"] = s.omega;
  json frozen = json::array();
  for (int k = 1; k <= s.n; ++k)
    if (s.frozen[k - 1]) frozen.push_back(k);
  j["frozen"] = std::move(frozen);
  if (s.word) j["word"] = s.word->letters;
  return j;
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.n = j.at("n").get<int>();
  s.omega = j.at("omega").get<IntMatrix>();
  s.frozen.assign(s.n, 0);
  for (int k : j.at("frozen").get<std::vector<int>>()) s.frozen.at(k - 1) = 1;
  if (j.contains("word")) s.word = Word{j.at("word").get<std::vector<int>>()};
  return s;
}

json string_system_to_json(const StringSystem& sys) {
  json j;
  j["word"] = sys.word.letters;
  json letters = json::object();
  for (const auto& [letter, data] : sys.letters) {
    json entry;
    entry["terms"] = poly_to_json(data.poly)["terms"];
    json forms = json::array();
    for (const auto& [form, coeff] : data.trop.forms) {
      (void)coeff;
      forms.push_back(form);
    }
    entry["forms"] = std::move(forms);
    letters[std::to_string(letter)] = std::move(entry);
  }
  j["letters"] = std::move(letters);
  return j;
}

namespace {

const char* status_name(IneqStatus s) {
  switch (s) {
    case IneqStatus::Facet: return "facet";
    case IneqStatus::Redundant: return "redundant";
    case IneqStatus::Duplicate: return "duplicate";
  }
  return "?";
}

}  // namespace

json redundancy_report_to_json(const InequalitySystem& sys, const RedundancyReport& rep) {
  json j;
  j["dim"] = sys.dim;
  j["facet_count"] = rep.facet_count;
  j["cross_letter_certificates"] = rep.any_cross_letter_certificate;
  json items = json::array();
  for (std::size_t e = 0; e < sys.entries.size(); ++e) {
    json it;
    it["form"] = sys.entries[e].form;
    json labels = json::array();
    for (const auto& lab : sys.entries[e].labels) {
      json l;
      l["letter"] = lab.letter;
      l["monomial"] = lab.mono_index;
      l["coeff"] = rational_str(lab.coeff);
      labels.push_back(std::move(l));
    }
    it["labels"] = std::move(labels);
    it["status"] = status_name(rep.items[e].status);
    if (rep.items[e].status == IneqStatus::Duplicate)
      it["duplicate_of"] = rep.items[e].duplicate_of;
    if (rep.items[e].cert) {
      json cert = json::object();
      for (const auto& [g, w] : rep.items[e].cert->weights)
        cert[std::to_string(g)] = rational_str(w);
      it["certificate"] = std::move(cert);
    }
    items.push_back(std::move(it));
  }
  j["items"] = std::move(items);
  return j;
}

std::string redundancy_report_to_csv(const InequalitySystem& sys, const RedundancyReport& rep) {
  std::ostringstream out;
  out << "index,letter,monomial,coeff,status,form\n";
  for (std::size_t e = 0; e < sys.entries.size(); ++e) {
    const auto& lab = sys.entries[e].labels.empty() ? IneqLabel{} : sys.entries[e].labels.front();
    out << e << "," << lab.letter << "," << lab.mono_index << "," << rational_str(lab.coeff) << ","
        << status_name(rep.items[e].status) << ",\"";
    for (std::size_t k = 0; k < sys.entries[e].form.size(); ++k) {
      if (k) out << " ";
      out << sys.entries[e].form[k];
    }
    out << "\"\n";
  }
  return out.str();
}

json trails_to_json(const std::vector<Trail>& trails) {
  json j = json::array();
  for (const Trail& t : trails) {
    json e;
    e["weights"] = t.weights;
    e["c"] = t.c;
    e["d"] = t.d;
    j.push_back(std::move(e));
  }
  return j;
}

json run_config_to_json(const RunConfig& cfg) {
  json j;
  j["type"] = cfg.type;
  j["words"] = cfg.words;
  j["letters"] = cfg.letters;
  j["format"] = cfg.format;
  j["output_path"] = cfg.output_path;
  json conv;
  conv["type2_reverse"] = cfg.conventions.type2_reverse;
  conv["type2_requires_cartan"] = cfg.conventions.type2_requires_cartan;
  conv["subword_product_shifted"] = cfg.conventions.subword_product_shifted;
  conv["trail_plain_endpoints"] = cfg.conventions.trail_plain_endpoints;
  conv["simply_braided_plain_root"] = cfg.conventions.simply_braided_plain_root;
  j["conventions"] = std::move(conv);
  j["sample_seed"] = cfg.sample_seed;
  j["box_bound"] = cfg.box_bound;
  json caps;
  caps["word_cap"] = cfg.caps.word_cap;
  caps["weyl_cap"] = cfg.caps.weyl_cap;
  j["caps"] = std::move(caps);
  return j;
}

RunConfig run_config_from_json(const json& j) {
  RunConfig cfg;
  cfg.type = j.at("type").get<std::string>();
  cfg.words = j.at("words").get<std::vector<std::string>>();
  cfg.letters = j.at("letters").get<std::vector<int>>();
  cfg.format = j.at("format").get<std::string>();
  cfg.output_path = j.at("output_path").get<std::string>();
  const json& conv = j.at("conventions");
  cfg.conventions.type2_reverse = conv.at("type2_reverse").get<bool>();
  cfg.conventions.type2_requires_cartan = conv.at("type2_requires_cartan").get<bool>();
  cfg.conventions.subword_product_shifted = conv.at("subword_product_shifted").get<bool>();
  cfg.conventions.trail_plain_endpoints = conv.at("trail_plain_endpoints").get<bool>();
  cfg.conventions.simply_braided_plain_root = conv.at("simply_braided_plain_root").get<bool>();
  cfg.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  cfg.box_bound = j.at("box_bound").get<int>();
  cfg.caps.word_cap = j.at("caps").at("word_cap").get<std::uint64_t>();
  cfg.caps.weyl_cap = j.at("caps").at("weyl_cap").get<std::uint64_t>();
  return cfg;
}

}  // namespace stringcone
