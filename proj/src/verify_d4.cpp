#include "stringcone/verify_d4.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stringcone/cluster.hpp"
#include "stringcone/polyhedral.hpp"
#include "stringcone/stringcone.hpp"

namespace stringcone {

Word d4_example_word() { return parse_word("2 1 3 4 2 1 3 4 2 1 3 4"); }
Word d4_example_word_variant() { return parse_word("2 1 4 2 3 2 4 2 1 2 3 4"); }
std::vector<int> d4_known_mutation_sequence() { return {6, 3, 5, 4, 3, 1, 2, 7, 6, 8}; }

bool D4Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const D4Check& c) { return c.passed; });
}

namespace {

// Recorded 27-term expansion of the letter-2 potential, as (coeff, sparse
// exponent) rows in the expansion's own variable labels.  Two rows are
// suspected misprints (they miss the common X9^{-1} factor) and are expected
// to stay unmatched by the relabeling search.
struct RefTerm {
  int coeff;
  std::vector<std::pair<int, int>> exps;  // (variable, exponent)
};

const std::vector<RefTerm>& reference_expansion() {
  static const std::vector<RefTerm> ref = {
      {1, {{9, -1}, {1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {2, -1}, {3, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {2, -1}, {4, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {3, -1}, {4, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{2, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {3, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {4, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {2, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {3, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {5, -2}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}}},
      {1, {{9, -1}, {3, -1}, {5, -1}, {6, -1}, {8, -1}}},
      {1, {{9, -1}, {2, -1}, {5, -1}, {7, -1}, {8, -1}}},
      {2, {{9, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {5, -1}, {6, -1}, {7, -1}}},
      {1, {{9, -1}, {5, -1}, {6, -1}, {8, -1}}},
      {1, {{9, -1}, {5, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {6, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {6, -1}, {7, -1}}},
      {1, {{9, -1}, {6, -1}, {8, -1}}},
      {1, {{9, -1}, {7, -1}, {8, -1}}},
      {1, {{9, -1}, {6, -1}}},
      {1, {{7, -1}}},
      {1, {{9, -1}, {8, -1}}},
      {1, {{9, -1}}},
  };
  return ref;
}

std::string poly_stats(const LaurentPoly& p) {
  std::map<std::string, int> cc;
  for (const auto& [e, c] : p.terms()) cc[rational_str(c)]++;
  std::ostringstream out;
  out << p.term_count() << " monomials (";
  bool first = true;
  for (const auto& [c, n] : cc) {
    if (!first) out << ", ";
    first = false;
    out << n << "x coeff " << c;
  }
  out << ")";
  return out.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << v[i];
  }
  return out.str();
}

}  // namespace

D4Report verify_d4(const Conventions& conv) {
  D4Report rep;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
  };
  const CartanDatum d4 = cartan_matrix("D4");
  const Word wa = d4_example_word();
  const Word wb = d4_example_word_variant();
  const int N = 12;
  rep.notes.push_back(
      "word A (" + word_str(wa) +
      ") reproduces every recorded fact of the worked example in position labels: the "
      "20-edge quiver, the optimized vertex set {10,11,12}, the single-monomial potentials, "
      "the 10-step mutation sequence and the 27-term expansion; word B (" + word_str(wb) +
      "), the word string the example is quoted under, computes to a 21-term potential and "
      "is pinned as a regression fixture");

  for (const auto& [tag, w] : {std::pair{"A", wa}, std::pair{"B", wb}}) {
    const WordProps props = word_props(d4, w);
    check(std::string("word ") + tag + " reduced of length 12",
          props.reduced && props.length == 12, word_str(w));
    const Seed s = seed_from_word(d4, w, conv);
    check(std::string("word ") + tag + " frozen vertices are 9..12",
          s.frozen == std::vector<char>{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
    rep.notes.push_back(std::string("word ") + tag + " optimized frozen vertices: " +
                        join_ints(optimized_frozen_vertices(s)));
  }

  // Headline counts on the example word.
  const LaurentPoly w2 = potential(d4, wa, 2, conv);
  check("letter-2 potential has 27 monomials", w2.term_count() == 27, poly_stats(w2));
  {
    int ones = 0, twos = 0, other = 0;
    for (const auto& [e, c] : w2.terms()) {
      (void)e;
      if (c == 1) ++ones;
      else if (c == 2) ++twos;
      else ++other;
    }
    check("coefficient multiset is {1 x26, 2 x1}", ones == 26 && twos == 1 && other == 0);
  }
  {
    const int f0 = frozen_vertex_of_letter(wa, 2) - 1;
    bool divisible = true;
    for (const auto& [e, c] : w2.terms()) {
      (void)c;
      if (e[f0] > -1) divisible = false;
    }
    check("every monomial divisible by the letter-2 frozen variable inverse", divisible);
  }

  const LaurentPoly v2 = varsigma(d4, wa, 2, conv);
  check("tropicalized system of letter 2 has 27 forms", v2.term_count() == 27);
  check("letter-2 polynomial is not multiplicity-free", !is_multiplicity_free(v2));

  const StringSystem sys = string_system(d4, wa, conv);
  const InequalitySystem letter2 = system_from_letter(sys, 2);
  const RedundancyReport red = classify_redundancy(letter2);
  check("letter-2 system has 26 facets", red.facet_count == 26);
  {
    std::vector<std::size_t> redundant;
    for (std::size_t e = 0; e < letter2.entries.size(); ++e)
      if (red.items[e].status == IneqStatus::Redundant) redundant.push_back(e);
    const bool unique = redundant.size() == 1;
    bool is_coeff2 = false, half_half = false, average = false, expected_pair = false;
    if (unique) {
      const std::size_t e = redundant.front();
      is_coeff2 = letter2.entries[e].labels.front().coeff == 2;
      const auto& cert = red.items[e].cert;
      if (cert && cert->weights.size() == 2) {
        half_half = true;
        ExponentVec sum(N, 0);
        std::set<ExponentVec> gens;
        for (const auto& [g, wt] : cert->weights) {
          if (wt != make_rational(1, 2)) half_half = false;
          gens.insert(letter2.entries[g].form);
          for (int k = 0; k < N; ++k) sum[k] += letter2.entries[g].form[k];
        }
        average = true;
        for (int k = 0; k < N; ++k)
          if (sum[k] != 2 * letter2.entries[e].form[k]) average = false;
        // The recorded identity pairs the X5^-2 X6^-1 X7^-1 X8^-1 X9^-1 and
        // X6^-1 X7^-1 X8^-1 X9^-1 monomials.
        const CAMatrix ca = ca_matrix(d4, wa);
        LaurentPoly vmono(N, Chart::X), wmono(N, Chart::X);
        ExponentVec ve(N, 0), we(N, 0);
        ve[4] = -2;
        ve[5] = ve[6] = ve[7] = ve[8] = -1;
        we[5] = we[6] = we[7] = we[8] = -1;
        vmono.add_term(ve, 1);
        wmono.add_term(we, 1);
        const std::set<ExponentVec> want{substitute_monomials(vmono, ca.E).terms().begin()->first,
                                         substitute_monomials(wmono, ca.E).terms().begin()->first};
        expected_pair = gens == want;
      }
    }
    check("exactly one redundant inequality", unique);
    check("the redundant form is the coefficient-2 monomial's", is_coeff2);
    check("certificate is the half/half combination of two forms", half_half);
    check("redundant exponent vector is the exact average of the two", average);
    check("certificate generators are the recorded identity's pair", expected_pair);
  }

  // Single-monomial potentials.
  check("word A letter-1 potential is the inverse frozen variable",
        potential(d4, wa, 1, conv) == LaurentPoly::variable(N, 10, -1),
        poly_stats(potential(d4, wa, 1, conv)));
  for (const auto& [tag, w] : {std::pair{"A", wa}, std::pair{"B", wb}}) {
    check(std::string("word ") + tag + " letter-3 potential is the inverse frozen variable",
          potential(d4, w, 3, conv) == LaurentPoly::variable(N, 11, -1));
    check(std::string("word ") + tag + " letter-4 potential is the inverse frozen variable",
          potential(d4, w, 4, conv) == LaurentPoly::variable(N, 12, -1));
  }
  {
    const LaurentPoly w1b = potential(d4, wb, 1, conv);
    rep.notes.push_back("word B letter-1 potential: " + w1b.str() +
                        (w1b.term_count() == 1 ? " (single monomial)"
                                               : " (not a single monomial; recorded claim says it is)"));
  }

  // The known mutation sequence reaches a seed optimized for vertex 9 and
  // reproduces the potential by direct pullback.
  {
    const std::vector<int> seq = d4_known_mutation_sequence();
    Seed cur = seed_from_word(d4, wa, conv);
    for (int v : seq) cur = mutate_seed(cur, v);
    const auto opt = optimized_frozen_vertices(cur);
    const bool opt9 = std::find(opt.begin(), opt.end(), 9) != opt.end();
    check("known mutation sequence reaches a seed optimized for vertex 9", opt9);
    if (opt9)
      check("pullback along the known sequence equals the potential",
            pullback_inverse_along(d4, wa, seq, 9, conv) == w2);
  }

  // Match against the recorded expansion up to a variable relabeling fixing
  // the common-factor variable.
  {
    std::set<ExponentVec> computed;
    for (const auto& [e, c] : w2.terms()) {
      (void)c;
      computed.insert(e);
    }
    std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};  // reference var -> computed var
    std::size_t best = 0;
    std::vector<int> best_perm = perm;
    do {
      std::size_t hits = 0;
      for (const RefTerm& t : reference_expansion()) {
        ExponentVec e(N, 0);
        for (const auto& [var, exp] : t.exps) e[(var == 9 ? 9 : perm[var - 1]) - 1] = exp;
        if (computed.count(e)) ++hits;
      }
      if (hits > best) {
        best = hits;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::ostringstream note;
    note << "recorded 27-term expansion: best relabeling matches " << best
         << "/27 monomials (relabeling " << join_ints(best_perm) << ")";
    rep.notes.push_back(note.str());
    check("recorded expansion matches 25 of 27 monomials up to relabeling", best >= 25);
  }

  // Regression anchors for the variant word's own computed values.
  {
    const LaurentPoly w2b = potential(d4, wb, 2, conv);
    check("word B letter-2 potential has 21 monomials", w2b.term_count() == 21, poly_stats(w2b));
    const StringSystem sysb = string_system(d4, wb, conv);
    const InequalitySystem l2b = system_from_letter(sysb, 2);
    const RedundancyReport redb = classify_redundancy(l2b);
    check("word B letter-2 system has 20 facets", redb.facet_count == 20);
    std::size_t redundant = 0;
    bool coeff2 = true;
    for (std::size_t e = 0; e < l2b.entries.size(); ++e)
      if (redb.items[e].status == IneqStatus::Redundant) {
        ++redundant;
        if (l2b.entries[e].labels.front().coeff != 2) coeff2 = false;
      }
    check("word B unique redundant form is its coefficient-2 monomial",
          redundant == 1 && coeff2);
  }

  // The coefficient-2 monomial is not a vertex of the Newton polytope.
  {
    const NewtonVertexReport nv = newton_vertex_report(w2);
    bool ok = true;
    for (const auto& item : nv.items) {
      const bool want_vertex = item.coeff == 1;
      if (item.vertex != want_vertex) ok = false;
    }
    check("Newton vertices are exactly the coefficient-1 monomials", ok);
  }

  return rep;
}

}  // namespace stringcone
