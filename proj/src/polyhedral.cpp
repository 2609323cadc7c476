#include "stringcone/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace stringcone {

InequalitySystem system_from_string_system(const StringSystem& sys) {
  InequalitySystem out;
  out.dim = sys.vars;
  for (const auto& [letter, data] : sys.letters) {
    (void)letter;
    for (const auto& ineq : data.ineqs)
      out.entries.push_back({ineq.form, {IneqLabel{ineq.letter, ineq.mono_index, ineq.coeff}}});
  }
  return out;
}

InequalitySystem system_from_letter(const StringSystem& sys, int letter) {
  InequalitySystem out;
  out.dim = sys.vars;
  for (const auto& ineq : sys.letters.at(letter).ineqs)
    out.entries.push_back({ineq.form, {IneqLabel{ineq.letter, ineq.mono_index, ineq.coeff}}});
  return out;
}

// ---------------------------------------------------------------------------
// Exact phase-1 simplex.

std::optional<FarkasCertificate> farkas_member(const ExponentVec& a0,
                                               const std::vector<ExponentVec>& gens) {
  const std::size_t d = a0.size();
  const std::size_t m = gens.size();
  for (const auto& g : gens)
    if (g.size() != d) throw invalid_input("generator dimension mismatch");

  // min sum(s) s.t. sum_j r_j g_j + s = a0 (rows sign-flipped to keep rhs >= 0),
  // r >= 0, s >= 0.  Columns: r_0..r_{m-1}, s_0..s_{d-1}; basis starts at s.
  const std::size_t cols = m + d;
  std::vector<std::vector<Rational>> T(d, std::vector<Rational>(cols + 1, 0));
  std::vector<std::size_t> basis(d);
  for (std::size_t r = 0; r < d; ++r) {
    const int sign = a0[r] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) T[r][j] = sign * gens[j][r];
    T[r][m + r] = 1;
    T[r][cols] = sign * a0[r];
    basis[r] = m + r;
  }

  auto reduced_cost = [&](std::size_t j) {
    // cost c_j - sum over rows with artificial basic of T[r][j]
    Rational rc = j >= m ? 1 : 0;
    for (std::size_t r = 0; r < d; ++r)
      if (basis[r] >= m) rc -= T[r][j];
    return rc;
  };

  while (true) {
    // Bland: smallest column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    // Ratio test; ties towards the smallest basic variable index.
    std::size_t leave = d;
    Rational best;
    for (std::size_t r = 0; r < d; ++r) {
      if (T[r][enter] <= 0) continue;
      const Rational ratio = T[r][cols] / T[r][enter];
      if (leave == d || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == d) throw convention_violation("phase-1 simplex is unbounded");
    const Rational piv = T[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      const Rational f = T[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t r = 0; r < d; ++r)
    if (basis[r] >= m) objective += T[r][cols];
  if (objective != 0) return std::nullopt;

  FarkasCertificate cert;
  for (std::size_t r = 0; r < d; ++r)
    if (basis[r] < m && T[r][cols] != 0) cert.weights[basis[r]] = T[r][cols];
  // Exactness check of the extracted combination.
  for (std::size_t r = 0; r < d; ++r) {
    Rational s = 0;
    for (const auto& [j, w] : cert.weights) s += w * gens[j][r];
    if (s != a0[r]) throw convention_violation("certificate does not reproduce the vector");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Farkas-based classification.

namespace {

bool is_zero_vec(const ExponentVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

struct MergedSystem {
  std::vector<ExponentVec> forms;               // distinct forms
  std::vector<std::vector<std::size_t>> members; // entry indices per form
  std::vector<std::size_t> rep_of_entry;        // entry index -> form index
};

MergedSystem merge_duplicates(const InequalitySystem& sys) {
  MergedSystem m;
  std::map<ExponentVec, std::size_t> index;
  m.rep_of_entry.resize(sys.entries.size());
  for (std::size_t e = 0; e < sys.entries.size(); ++e) {
    const auto& form = sys.entries[e].form;
    auto [it, inserted] = index.emplace(form, m.forms.size());
    if (inserted) {
      m.forms.push_back(form);
      m.members.emplace_back();
    }
    m.members[it->second].push_back(e);
    m.rep_of_entry[e] = it->second;
  }
  return m;
}

std::vector<ExponentVec> gather(const std::vector<ExponentVec>& forms,
                                const std::vector<std::size_t>& idx) {
  std::vector<ExponentVec> out;
  out.reserve(idx.size());
  for (std::size_t j : idx) out.push_back(forms[j]);
  return out;
}

}  // namespace

RedundancyReport classify_redundancy(const InequalitySystem& sys) {
  if (sys.entries.empty()) throw invalid_input("classify_redundancy on an empty system");
  const MergedSystem merged = merge_duplicates(sys);
  const std::size_t nf = merged.forms.size();

  // Redundancy status: conic-hull membership among all the other forms.
  std::vector<char> redundant(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    if (is_zero_vec(merged.forms[f])) {
      redundant[f] = 1;
      continue;
    }
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < nf; ++j)
      if (j != f) others.push_back(j);
    if (!others.empty() && farkas_member(merged.forms[f], gather(merged.forms, others)))
      redundant[f] = 1;
  }

  // Facet core: sequential deletion with re-testing, descending lex order.
  std::vector<std::size_t> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return merged.forms[a] > merged.forms[b]; });
  std::vector<char> kept(nf, 1);
  for (std::size_t f : order) {
    if (is_zero_vec(merged.forms[f])) {
      kept[f] = 0;
      continue;
    }
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < nf; ++j)
      if (j != f && kept[j]) others.push_back(j);
    if (others.empty()) continue;
    if (farkas_member(merged.forms[f], gather(merged.forms, others))) kept[f] = 0;
  }
  std::vector<std::size_t> core;
  for (std::size_t j = 0; j < nf; ++j)
    if (kept[j]) core.push_back(j);
  const std::vector<ExponentVec> core_forms = gather(merged.forms, core);

  RedundancyReport rep;
  rep.items.resize(sys.entries.size());
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& members = merged.members[f];
    // Non-representative duplicates.
    for (std::size_t mi = 1; mi < members.size(); ++mi) {
      rep.items[members[mi]].status = IneqStatus::Duplicate;
      rep.items[members[mi]].duplicate_of = members[0];
    }
    const std::size_t entry = members[0];
    if (kept[f]) {
      rep.kept.push_back(entry);
      ++rep.facet_count;
    }
    if (!redundant[f]) {
      rep.items[entry].status = IneqStatus::Facet;
      continue;
    }
    rep.items[entry].status = IneqStatus::Redundant;
    // Certificate against the kept core when possible (it witnesses that
    // dropping the form keeps the cone); otherwise against all other forms.
    auto cert = farkas_member(merged.forms[f], core_forms);
    if (cert) {
      FarkasCertificate remapped;
      for (const auto& [j, w] : cert->weights) remapped.weights[merged.members[core[j]][0]] = w;
      rep.items[entry].cert = std::move(remapped);
    } else {
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < nf; ++j)
        if (j != f) others.push_back(j);
      cert = farkas_member(merged.forms[f], gather(merged.forms, others));
      if (!cert) throw convention_violation("redundant inequality without a certificate");
      FarkasCertificate remapped;
      for (const auto& [j, w] : cert->weights) remapped.weights[merged.members[others[j]][0]] = w;
      rep.items[entry].cert = std::move(remapped);
    }

    // Cross-letter check: a certificate generator whose letters are disjoint
    // from the target's letters mixes letters.
    auto letters_of = [&](std::size_t e) {
      std::set<int> ls;
      for (std::size_t me : merged.members[merged.rep_of_entry[e]])
        for (const auto& lab : sys.entries[me].labels) ls.insert(lab.letter);
      return ls;
    };
    const std::set<int> target_letters = letters_of(entry);
    for (const auto& [e, w] : rep.items[entry].cert->weights) {
      (void)w;
      const std::set<int> gen_letters = letters_of(e);
      bool overlap = false;
      for (int l : gen_letters)
        if (target_letters.count(l)) overlap = true;
      if (!overlap && !target_letters.empty() && !gen_letters.empty())
        rep.any_cross_letter_certificate = true;
    }
  }
  return rep;
}

InequalitySystem facets(const InequalitySystem& sys) {
  const RedundancyReport rep = classify_redundancy(sys);
  InequalitySystem out;
  out.dim = sys.dim;
  for (std::size_t e : rep.kept) out.entries.push_back(sys.entries[e]);
  return out;
}

// ---------------------------------------------------------------------------
// Double description.

namespace {

using BigVec = std::vector<Integer>;

Integer dot_big(const ExponentVec& a, const BigVec& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
  return s;
}

void normalize_content(BigVec& v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

int rank_of(std::vector<BigVec> rows) {
  int rank = 0;
  const std::size_t nr = rows.size();
  if (nr == 0) return 0;
  const std::size_t nc = rows[0].size();
  std::size_t rr = 0;
  for (std::size_t col = 0; col < nc && rr < nr; ++col) {
    std::size_t p = rr;
    while (p < nr && rows[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(rows[rr], rows[p]);
    for (std::size_t r = rr + 1; r < nr; ++r) {
      if (rows[r][col] == 0) continue;
      const Integer a = rows[rr][col], b = rows[r][col];
      for (std::size_t c2 = col; c2 < nc; ++c2) rows[r][c2] = rows[r][c2] * a - rows[rr][c2] * b;
    }
    ++rr;
    ++rank;
  }
  return rank;
}

struct DDRay {
  BigVec v;
  std::uint64_t tight = 0;  // bitset over constraint indices
};

struct DDState {
  std::vector<BigVec> lineality;
  std::vector<DDRay> rays;
};

std::uint64_t honest_tight(const BigVec& v, const std::vector<ExponentVec>& forms,
                           std::size_t upto) {
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < upto; ++j)
    if (dot_big(forms[j], v) == 0) bits |= (1ull << j);
  return bits;
}

void dedupe_rays(std::vector<DDRay>& rays) {
  std::sort(rays.begin(), rays.end(), [](const DDRay& a, const DDRay& b) { return a.v < b.v; });
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const DDRay& a, const DDRay& b) { return a.v == b.v; }),
             rays.end());
}

DDState dd_compute(int dim, const std::vector<ExponentVec>& forms) {
  if (forms.size() > 64) throw limit_exceeded("double description limited to 64 inequalities");
  DDState st;
  for (int i = 0; i < dim; ++i) {
    BigVec e(dim, 0);
    e[i] = 1;
    st.lineality.push_back(std::move(e));
  }
  for (std::size_t ci = 0; ci < forms.size(); ++ci) {
    const ExponentVec& a = forms[ci];
    // A lineality direction crossing the hyperplane absorbs the constraint.
    std::size_t pivot = st.lineality.size();
    for (std::size_t i = 0; i < st.lineality.size(); ++i)
      if (dot_big(a, st.lineality[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < st.lineality.size()) {
      const BigVec v = st.lineality[pivot];
      const Integer av = dot_big(a, v);
      std::vector<BigVec> newlin;
      for (std::size_t i = 0; i < st.lineality.size(); ++i) {
        if (i == pivot) continue;
        const Integer aw = dot_big(a, st.lineality[i]);
        BigVec w(dim);
        for (int k2 = 0; k2 < dim; ++k2) w[k2] = st.lineality[i][k2] * av - v[k2] * aw;
        normalize_content(w);
        newlin.push_back(std::move(w));
      }
      st.lineality = std::move(newlin);
      for (DDRay& r : st.rays) {
        const Integer ar = dot_big(a, r.v);
        // Project onto the hyperplane with a positive multiple of the ray.
        const int s = av < 0 ? -1 : 1;
        BigVec w(dim);
        for (int k2 = 0; k2 < dim; ++k2) w[k2] = s * (r.v[k2] * av - v[k2] * ar);
        normalize_content(w);
        r.v = std::move(w);
        r.tight = honest_tight(r.v, forms, ci + 1);
      }
      DDRay nr;
      nr.v = v;
      if (av < 0)
        for (Integer& x : nr.v) x = -x;
      normalize_content(nr.v);
      nr.tight = honest_tight(nr.v, forms, ci + 1);
      st.rays.push_back(std::move(nr));
      dedupe_rays(st.rays);
      continue;
    }
    // Pointed step in the quotient modulo lineality.
    std::vector<DDRay> plus, zero, minus;
    for (DDRay& r : st.rays) {
      const Integer ar = dot_big(a, r.v);
      if (ar > 0)
        plus.push_back(std::move(r));
      else if (ar < 0)
        minus.push_back(std::move(r));
      else {
        r.tight |= (1ull << ci);
        zero.push_back(std::move(r));
      }
    }
    const int quotient_dim = dim - static_cast<int>(st.lineality.size());
    std::vector<DDRay> next;
    next.insert(next.end(), zero.begin(), zero.end());
    next.insert(next.end(), plus.begin(), plus.end());
    for (const DDRay& p : plus) {
      for (const DDRay& q : minus) {
        const std::uint64_t common = p.tight & q.tight;
        // Adjacency: the common tight constraints span a space of dimension
        // quotient_dim - 2 (constraint rows vanish on the lineality, so the
        // ambient rank already measures the quotient rank).
        std::vector<BigVec> rows;
        for (std::size_t j = 0; j < ci; ++j)
          if (common & (1ull << j)) {
            BigVec row(dim);
            for (int k2 = 0; k2 < dim; ++k2) row[k2] = forms[j][k2];
            rows.push_back(std::move(row));
          }
        if (rank_of(std::move(rows)) != quotient_dim - 2) continue;
        const Integer ap = dot_big(a, p.v);
        const Integer aq = dot_big(a, q.v);
        DDRay w;
        w.v.assign(dim, 0);
        for (int k2 = 0; k2 < dim; ++k2) w.v[k2] = p.v[k2] * (-aq) + q.v[k2] * ap;
        normalize_content(w.v);
        w.tight = honest_tight(w.v, forms, ci + 1);
        next.push_back(std::move(w));
      }
    }
    st.rays = std::move(next);
    dedupe_rays(st.rays);
  }
  return st;
}

}  // namespace

ConeGenerators double_description(int dim, const std::vector<ExponentVec>& forms) {
  const DDState st = dd_compute(dim, forms);
  ConeGenerators g;
  g.lineality = st.lineality;
  for (const DDRay& r : st.rays) g.rays.push_back(r.v);
  return g;
}

BruteForceReport brute_force_redundancy(const InequalitySystem& sys) {
  if (sys.dim > 12) throw limit_exceeded("brute-force oracle limited to dimension 12");
  if (sys.entries.size() > 64) throw limit_exceeded("brute-force oracle limited to 64 inequalities");
  const MergedSystem merged = merge_duplicates(sys);
  const ConeGenerators gen = double_description(sys.dim, merged.forms);

  std::vector<BigVec> span;
  for (const auto& l : gen.lineality) span.push_back(l);
  for (const auto& r : gen.rays) span.push_back(r);
  const int cone_dim = rank_of(span);

  BruteForceReport rep;
  rep.cone_dim = cone_dim;
  rep.ray_count = gen.rays.size();
  rep.lineality_dim = gen.lineality.size();
  rep.status.assign(sys.entries.size(), IneqStatus::Redundant);
  for (std::size_t f = 0; f < merged.forms.size(); ++f) {
    std::vector<BigVec> tight = gen.lineality;
    for (const auto& r : gen.rays)
      if (dot_big(merged.forms[f], r) == 0) tight.push_back(r);
    const bool facet = rank_of(tight) == cone_dim - 1;
    const auto& members = merged.members[f];
    rep.status[members[0]] = facet ? IneqStatus::Facet : IneqStatus::Redundant;
    for (std::size_t mi = 1; mi < members.size(); ++mi)
      rep.status[members[mi]] = IneqStatus::Duplicate;
  }
  return rep;
}

NewtonVertexReport newton_vertex_report(const LaurentPoly& p) {
  NewtonVertexReport rep;
  std::vector<ExponentVec> support;
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    support.push_back(e);
    coeffs.push_back(c);
  }
  const std::size_t n = support.size();
  for (std::size_t i = 0; i < n; ++i) {
    // u is a vertex iff (u,1) is not a non-negative combination of the other
    // lifted support points (v,1).
    std::vector<ExponentVec> lifted;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ExponentVec v = support[j];
      v.push_back(1);
      lifted.push_back(std::move(v));
    }
    ExponentVec target = support[i];
    target.push_back(1);
    const bool vertex = lifted.empty() || !farkas_member(target, lifted);
    rep.items.push_back({support[i], coeffs[i], vertex});
  }
  return rep;
}

}  // namespace stringcone
