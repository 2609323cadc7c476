#include "stringcone/stringcone.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace stringcone {

CAMatrix ca_matrix(const CartanDatum& c, const Word& i) {
  if (!word_props(c, i).reduced) throw invalid_input("ca_matrix requires a reduced word");
  const int N = i.size();
  CAMatrix m;
  m.E.assign(N, IntVector(N, 0));
  for (int k = 1; k <= N; ++k) {
    const int kp = k_plus(i, k);
    for (int l = 1; l <= N; ++l) {
      int v = 0;
      if (l == k || l == kp)
        v = -c.c(i.at(k), i.at(k)) / 2;  // = -1
      else if (k < l && l < kp)
        v = -c.c(i.at(k), i.at(l));
      m.E[k - 1][l - 1] = v;
      if (v < -1 || v > 1) throw convention_violation("torus map entry out of range");
    }
  }
  const Integer d = det(m.E);
  if (d != 1 && d != -1) throw convention_violation("torus map matrix is not unimodular");
  return m;
}

Integer det(const IntMatrix& m) {
  // Fraction-free Gaussian elimination (Bareiss).
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

LaurentPoly varsigma(const CartanDatum& c, const Word& i, int letter, const Conventions& conv) {
  const LaurentPoly w = potential(c, i, letter, conv);
  const CAMatrix e = ca_matrix(c, i);
  LaurentPoly v = substitute_monomials(w, e.E);
  if (!v.positive_integer_coeffs())
    throw convention_violation("varsigma has a non-positive-integer coefficient");
  if (i.letters.back() == letter) {
    const LaurentPoly xn = LaurentPoly::variable(i.size(), i.size(), 1, Chart::x);
    if (!(v == xn)) throw convention_violation("varsigma of a word ending in the letter is not x_N");
  }
  return v;
}

StringSystem string_system(const CartanDatum& c, const Word& i, const Conventions& conv) {
  StringSystem sys;
  sys.word = i;
  sys.vars = i.size();
  for (int letter = 1; letter <= c.n(); ++letter) {
    LetterData data;
    data.poly = varsigma(c, i, letter, conv);
    data.trop = tropicalize(data.poly);
    int idx = 0;
    for (const auto& [form, coeff] : data.trop.forms)
      data.ineqs.push_back(StringIneq{letter, idx++, coeff, form});
    sys.letters.emplace(letter, std::move(data));
  }
  return sys;
}

bool cone_contains(const StringSystem& sys, const std::vector<long long>& t) {
  for (const auto& [letter, data] : sys.letters) {
    (void)letter;
    for (const auto& ineq : data.ineqs)
      if (dot(ineq.form, t) < 0) return false;
  }
  return true;
}

std::vector<std::vector<long long>> cone_lattice_points(const StringSystem& sys, int box_bound,
                                                        std::uint64_t seed,
                                                        std::size_t max_points) {
  const int n = sys.vars;
  std::vector<std::vector<long long>> out;
  if (n <= 6) {
    std::vector<long long> t(n, 0);
    while (true) {
      if (cone_contains(sys, t)) out.push_back(t);
      int p = 0;
      while (p < n && t[p] == box_bound) t[p++] = 0;
      if (p == n) break;
      ++t[p];
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(0, box_bound);
    std::set<std::vector<long long>> seen;
    for (std::size_t tries = 0; tries < max_points * 64 && out.size() < max_points; ++tries) {
      std::vector<long long> t(n);
      for (int k = 0; k < n; ++k) t[k] = dist(rng);
      if (seen.insert(t).second && cone_contains(sys, t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<long long> PiecewiseLinearMap::apply(std::vector<long long> t) const {
  if (static_cast<int>(t.size()) != vars) throw invalid_input("point has wrong length");
  for (const PsiStep& st : steps) {
    const int k = st.pos;  // 1-based
    if (st.kind == MoveKind::TwoTerm) {
      std::swap(t[k - 1], t[k]);
    } else {
      const long long a = t[k - 2], b = t[k - 1], c = t[k];
      t[k - 2] = std::max(c, b - a);
      t[k - 1] = a + c;
      t[k] = std::min(a, b - c);
    }
  }
  return t;
}

PiecewiseLinearMap PiecewiseLinearMap::inverse() const {
  // Each elementary step is an involution, so reversing the list inverts.
  PiecewiseLinearMap inv;
  inv.vars = vars;
  inv.steps.assign(steps.rbegin(), steps.rend());
  return inv;
}

PiecewiseLinearMap psi(const CartanDatum& c, const Word& from, const Word& to) {
  const MoveSequence seq = move_path(c, from, to);
  PiecewiseLinearMap map;
  map.vars = from.size();
  for (const Move& m : seq.moves) map.steps.push_back(PsiStep{m.kind, m.pos});
  return map;
}

PsiCompatReport psi_compat_check(const CartanDatum& c, const Word& from, const Word& to,
                                 int letter, const std::vector<std::vector<long long>>& points,
                                 const Conventions& conv) {
  const StringSystem sys_from = string_system(c, from, conv);
  const StringSystem sys_to = string_system(c, to, conv);
  const PiecewiseLinearMap map = psi(c, from, to);
  const TropicalForm& trop_from = sys_from.letters.at(letter).trop;
  const TropicalForm& trop_to = sys_to.letters.at(letter).trop;

  PsiCompatReport rep;
  for (const auto& t : points) {
    const std::vector<long long> image = map.apply(t);
    const bool equal = eval_tropical(trop_from, t) == eval_tropical(trop_to, image);
    if (cone_contains(sys_from, t)) {
      ++rep.on_cone_checked;
      if (!equal) {
        ++rep.on_cone_failures;
        rep.failure_points.push_back(t);
      }
      if (!cone_contains(sys_to, image)) {
        ++rep.image_membership_failures;
        rep.failure_points.push_back(t);
      }
    } else {
      ++rep.off_cone_checked;
      if (!equal) ++rep.off_cone_failures;
    }
  }
  return rep;
}

}  // namespace stringcone
