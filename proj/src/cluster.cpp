#include "stringcone/cluster.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace stringcone {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

std::vector<int> swap_perm(int n, int a0, int b0) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[a0], perm[b0]);
  return perm;
}

// Express a polynomial given in relabeled coordinates back in the original
// ones: old exponent j = new exponent perm[j].
LaurentPoly poly_permute_back(const LaurentPoly& p, const std::vector<int>& perm) {
  LaurentPoly r(p.vars(), p.chart());
  for (const auto& [e, c] : p.terms()) {
    ExponentVec ne(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) ne[j] = e[perm[j]];
    r.add_term(ne, c);
  }
  return r;
}

std::vector<MutationStep> moves_to_steps(int n, const std::vector<Move>& moves) {
  std::vector<MutationStep> steps;
  steps.reserve(moves.size());
  for (const Move& m : moves) {
    MutationStep st;
    if (m.kind == MoveKind::ThreeTerm) st.vertex = m.pos - 1;
    st.perm = swap_perm(n, m.pos - 1, m.pos);
    steps.push_back(std::move(st));
  }
  return steps;
}

}  // namespace

int frozen_vertex_of_letter(const Word& i, int letter) {
  for (int k = i.size(); k >= 1; --k)
    if (i.at(k) == letter) return k;
  throw invalid_input("letter does not occur in the word");
}

Seed seed_from_word(const CartanDatum& c, const Word& i, const Conventions& conv) {
  if (!word_props(c, i).reduced) throw invalid_input("seed_from_word requires a reduced word");
  const int N = i.size();
  Seed s;
  s.n = N;
  s.omega.assign(N, IntVector(N, 0));
  s.frozen.assign(N, 0);
  std::vector<int> kp(N + 1);
  for (int k = 1; k <= N; ++k) {
    kp[k] = k_plus(i, k);
    if (kp[k] == N + 1) s.frozen[k - 1] = 1;
  }
  auto arrow = [&](int from1, int to1) {
    s.omega[from1 - 1][to1 - 1] += 1;
    s.omega[to1 - 1][from1 - 1] -= 1;
  };
  for (int k = 1; k <= N; ++k) {
    for (int l = k + 1; l <= N; ++l) {
      if (s.frozen[k - 1] && s.frozen[l - 1]) continue;
      if (l == kp[k]) {
        arrow(k, l);
      } else if (l < kp[k] && kp[k] < kp[l]) {
        if (conv.type2_requires_cartan && c.c(i.at(k), i.at(l)) == 0) continue;
        if (conv.type2_reverse)
          arrow(k, l);
        else
          arrow(l, k);
      }
    }
  }
  s.word = i;
  return s;
}

Seed mutate_seed(const Seed& s, int k1) {
  if (k1 < 1 || k1 > s.n) throw invalid_input("mutation vertex out of range");
  if (!s.mutable_at(k1)) throw invalid_input("mutation at a frozen vertex");
  const int k = k1 - 1;
  Seed r;
  r.n = s.n;
  r.frozen = s.frozen;
  r.omega.assign(s.n, IntVector(s.n, 0));
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (i == k || j == k)
        r.omega[i][j] = -s.omega[i][j];
      else
        r.omega[i][j] = s.omega[i][j] + sgn(s.omega[i][k]) * std::max(0, s.omega[i][k] * s.omega[k][j]);
    }
  }
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (s.frozen[i] && s.frozen[j]) r.omega[i][j] = 0;
  return r;
}

Seed relabel_seed(const Seed& s, const std::vector<int>& perm) {
  Seed r;
  r.n = s.n;
  r.omega.assign(s.n, IntVector(s.n, 0));
  r.frozen.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i) {
    r.frozen[perm[i]] = s.frozen[i];
    for (int j = 0; j < s.n; ++j) r.omega[perm[i]][perm[j]] = s.omega[i][j];
  }
  return r;
}

std::vector<LaurentPoly> mutate_a(const std::vector<LaurentPoly>& a, const Seed& s, int k1) {
  if (static_cast<int>(a.size()) != s.n) throw invalid_input("assignment size mismatch");
  if (!s.mutable_at(k1)) throw invalid_input("A-mutation at a frozen vertex");
  const int k = k1 - 1;
  const int vars = a[k].vars();
  LaurentPoly plus = LaurentPoly::constant(vars, 1, a[k].chart());
  LaurentPoly minus = plus;
  for (int j = 0; j < s.n; ++j) {
    const int w = s.omega[j][k];
    if (w > 0) plus = plus * a[j].pow(w);
    if (w < 0) minus = minus * a[j].pow(-w);
  }
  std::vector<LaurentPoly> r = a;
  r[k] = divide_exact(plus + minus, a[k]);
  return r;
}

LaurentPoly pullback_x(const LaurentPoly& p, const Seed& s, int k1) {
  if (p.vars() != s.n) throw invalid_input("chart size mismatch");
  if (!s.mutable_at(k1)) throw invalid_input("pullback through a frozen vertex");
  const int k = k1 - 1;
  const int n = s.n;

  // X_i(Sigma') = X_i (1 + X_k^{-sgn w})^{-w} with w = <e_i, e_k>; normalising
  // both binomial signs to powers of B = 1 + X_k^{-1} leaves per-monomial data
  // (adjusted exponents, net power of B).
  struct Piece {
    ExponentVec exps;
    Rational coeff;
    long long bpow;
  };
  std::vector<Piece> pieces;
  long long q = 0;
  for (const auto& [e, coef] : p.terms()) {
    long long bpow = 0, extra = 0;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const int w = s.omega[i][k];
      if (w == 0 || e[i] == 0) continue;
      bpow += -static_cast<long long>(w) * e[i];
      if (w < 0) extra += -static_cast<long long>(w) * e[i];
    }
    Piece piece;
    piece.exps = e;
    piece.exps[k] = static_cast<int>(-e[k] + extra);
    piece.coeff = coef;
    piece.bpow = bpow;
    q = std::max(q, -bpow);
    pieces.push_back(std::move(piece));
  }

  LaurentPoly binom = LaurentPoly::constant(n, 1, p.chart()) + LaurentPoly::variable(n, k1, -1, p.chart());
  LaurentPoly numerator(n, p.chart());
  for (const Piece& piece : pieces) {
    LaurentPoly term = LaurentPoly::monomial(n, piece.coeff, piece.exps, p.chart());
    const long long e = piece.bpow + q;
    if (e > 0) term = term * binom.pow(static_cast<unsigned>(e));
    numerator = numerator + term;
  }
  try {
    for (long long r = 0; r < q; ++r) numerator = divide_exact(numerator, binom);
  } catch (const not_divisible&) {
    throw convention_violation("X-mutation pullback is not Laurent");
  }
  return numerator;
}

OptSequence opt_sequence(const CartanDatum& c, const Word& i, int letter,
                         const Conventions& conv, TieBreak tb) {
  (void)conv;
  if (letter < 1 || letter > c.n()) throw invalid_input("letter out of range");
  if (!word_props(c, i).reduced) throw invalid_input("opt_sequence requires a reduced word");
  OptSequence out;
  if (i.letters.back() == letter) {
    out.target = i;
    out.moves = MoveSequence{i, i, {}};
    return out;
  }
  std::map<Word, std::pair<Word, Move>> parent;
  std::queue<Word> q;
  parent.emplace(i, std::make_pair(i, Move{MoveKind::TwoTerm, 0}));
  q.push(i);
  std::optional<Word> found;
  while (!q.empty() && !found) {
    const Word cur = q.front();
    q.pop();
    auto nbrs = word_neighbors(c, cur);
    if (tb == TieBreak::LexLargest) std::reverse(nbrs.begin(), nbrs.end());
    for (const auto& [next, mv] : nbrs) {
      if (!parent.emplace(next, std::make_pair(cur, mv)).second) continue;
      if (next.letters.back() == letter) {
        found = next;
        break;
      }
      q.push(next);
    }
  }
  if (!found) throw convention_violation("no word ending in the letter is reachable");
  out.target = *found;
  out.moves = MoveSequence{i, *found, {}};
  Word cur = *found;
  while (!(cur == i)) {
    const auto& [prev, mv] = parent.at(cur);
    out.moves.moves.push_back(mv);
    cur = prev;
  }
  std::reverse(out.moves.moves.begin(), out.moves.moves.end());
  out.steps = moves_to_steps(i.size(), out.moves.moves);
  return out;
}

namespace {

LaurentPoly potential_core(const CartanDatum& c, const Word& i, int letter, const Word& target,
                           const std::vector<MutationStep>& steps, const Conventions& conv,
                           const TraceSink& trace) {
  const int N = i.size();
  Seed s = seed_from_word(c, i, conv);
  std::vector<Seed> pre(steps.size());
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const MutationStep& st = steps[t];
    if (st.vertex) {
      pre[t] = s;
      s = mutate_seed(s, *st.vertex);
    }
    if (!st.perm.empty()) s = relabel_seed(s, st.perm);
    if (trace) {
      std::ostringstream line;
      line << "step " << (t + 1) << "/" << steps.size();
      if (st.vertex) line << " mutate " << *st.vertex;
      if (!st.perm.empty()) {
        line << " relabel";
        for (std::size_t j = 0; j < st.perm.size(); ++j)
          if (st.perm[j] != static_cast<int>(j)) line << " " << (j + 1) << "->" << (st.perm[j] + 1);
      }
      trace(line.str());
    }
  }
  if (!(s == seed_from_word(c, target, conv)))
    throw convention_violation("seed walk does not reproduce the target word's seed");

  LaurentPoly p = LaurentPoly::variable(N, N, -1, Chart::X);
  for (std::size_t t = steps.size(); t-- > 0;) {
    const MutationStep& st = steps[t];
    if (!st.perm.empty()) p = poly_permute_back(p, st.perm);
    if (st.vertex) p = pullback_x(p, pre[t], *st.vertex);
  }

  if (!p.positive_integer_coeffs())
    throw convention_violation("potential has a non-positive-integer coefficient");
  const int f0 = frozen_vertex_of_letter(i, letter) - 1;
  for (const auto& [e, coef] : p.terms()) {
    (void)coef;
    for (int x : e)
      if (x > 0) throw convention_violation("potential has a positive exponent");
    if (e[f0] > -1)
      throw convention_violation("potential monomial misses the frozen variable inverse");
  }
  return p;
}

}  // namespace

LaurentPoly potential(const CartanDatum& c, const Word& i, int letter, const Conventions& conv,
                      TieBreak tb, const TraceSink& trace) {
  const OptSequence seq = opt_sequence(c, i, letter, conv, tb);
  return potential_core(c, i, letter, seq.target, seq.steps, conv, trace);
}

LaurentPoly potential_along(const CartanDatum& c, const Word& i, int letter,
                            const MoveSequence& moves, const Conventions& conv) {
  if (!(moves.source == i)) throw invalid_input("move sequence does not start at the word");
  if (moves.target.letters.back() != letter)
    throw invalid_input("move sequence does not end in a word ending with the letter");
  return potential_core(c, i, letter, moves.target, moves_to_steps(i.size(), moves.moves), conv,
                        nullptr);
}

LaurentPoly pullback_inverse_along(const CartanDatum& c, const Word& i,
                                   const std::vector<int>& mutation_vertices, int vertex1,
                                   const Conventions& conv) {
  Seed s = seed_from_word(c, i, conv);
  std::vector<Seed> pre;
  pre.reserve(mutation_vertices.size());
  for (int v : mutation_vertices) {
    pre.push_back(s);
    s = mutate_seed(s, v);
  }
  LaurentPoly p = LaurentPoly::variable(s.n, vertex1, -1, Chart::X);
  for (std::size_t t = mutation_vertices.size(); t-- > 0;)
    p = pullback_x(p, pre[t], mutation_vertices[t]);
  return p;
}

PrincipalData principal_tracking(const CartanDatum& c, const Word& i,
                                 const std::vector<MutationStep>& steps, const Conventions& conv) {
  const int N = i.size();
  Seed s = seed_from_word(c, i, conv);
  IntMatrix C(N, IntVector(N, 0));
  for (int d = 0; d < N; ++d) C[d][d] = 1;
  std::vector<LaurentPoly> F(N, LaurentPoly::constant(N, 1, Chart::X));

  auto check_state = [&](const IntMatrix& cm, const std::vector<LaurentPoly>& fs) {
    for (int j = 0; j < N; ++j) {
      bool pos = true, neg = true;
      for (int r = 0; r < N; ++r) {
        if (cm[r][j] < 0) pos = false;
        if (cm[r][j] > 0) neg = false;
      }
      if (!pos && !neg) throw convention_violation("c-vector is not sign-coherent");
      if (fs[j].coeff(ExponentVec(N, 0)) != 1)
        throw convention_violation("F-polynomial constant term is not 1");
    }
  };

  for (const MutationStep& st : steps) {
    if (st.vertex) {
      const int k1 = *st.vertex;
      if (!s.mutable_at(k1)) throw invalid_input("principal tracking mutation at frozen vertex");
      const int k = k1 - 1;
      ExponentVec eplus(N, 0), eminus(N, 0);
      for (int r = 0; r < N; ++r) {
        eplus[r] = std::max(C[r][k], 0);
        eminus[r] = std::max(-C[r][k], 0);
      }
      LaurentPoly t1 = LaurentPoly::monomial(N, 1, eplus, Chart::X);
      LaurentPoly t2 = LaurentPoly::monomial(N, 1, eminus, Chart::X);
      for (int j = 0; j < N; ++j) {
        const int b = s.omega[j][k];
        if (b > 0) t1 = t1 * F[j].pow(b);
        if (b < 0) t2 = t2 * F[j].pow(-b);
      }
      LaurentPoly fk = divide_exact(t1 + t2, F[k]);
      IntMatrix C2 = C;
      for (int j = 0; j < N; ++j) {
        if (j == k) {
          for (int r = 0; r < N; ++r) C2[r][j] = -C[r][j];
          continue;
        }
        const int bkj = s.omega[k][j];
        if (bkj == 0) continue;
        for (int r = 0; r < N; ++r)
          C2[r][j] = C[r][j] + std::max(bkj, 0) * C[r][k] + bkj * std::max(-C[r][k], 0);
      }
      C = std::move(C2);
      F[k] = std::move(fk);
      s = mutate_seed(s, k1);
      check_state(C, F);
    }
    if (!st.perm.empty()) {
      s = relabel_seed(s, st.perm);
      IntMatrix C2(N, IntVector(N, 0));
      std::vector<LaurentPoly> F2(N);
      for (int j = 0; j < N; ++j) {
        F2[st.perm[j]] = F[j];
        for (int r = 0; r < N; ++r) C2[r][st.perm[j]] = C[r][j];
      }
      C = std::move(C2);
      F = std::move(F2);
    }
  }
  return PrincipalData{std::move(C), std::move(F), std::move(s)};
}

LaurentPoly potential_via_separation(const CartanDatum& c, const Word& i, int letter,
                                     const Conventions& conv, TieBreak tb) {
  const OptSequence seq = opt_sequence(c, i, letter, conv, tb);
  const PrincipalData pd = principal_tracking(c, i, seq.steps, conv);
  const int N = i.size();
  const int m = N - 1;  // frozen vertex of the letter in the target word's labels
  if (!pd.seed.frozen[m]) throw convention_violation("separation target vertex is not frozen");

  ExponentVec mono(N, 0);
  for (int r = 0; r < N; ++r) mono[r] = -pd.cmat[r][m];
  LaurentPoly w = LaurentPoly::monomial(N, 1, mono, Chart::X);

  IntMatrix neg_id(N, IntVector(N, 0));
  for (int r = 0; r < N; ++r) neg_id[r][r] = -1;
  for (int j = 0; j < N; ++j) {
    const int b = pd.seed.omega[j][m];
    if (b > 0) {
      w = w * remap_exponents(pd.F[j], neg_id, Chart::X).pow(b);
    } else if (b < 0 && pd.F[j].term_count() > 1) {
      throw convention_violation("separation formula needs a negative F exponent");
    }
  }
  (void)letter;
  return w;
}

std::vector<int> optimized_frozen_vertices(const Seed& s) {
  std::vector<int> out;
  for (int k = 0; k < s.n; ++k) {
    if (!s.frozen[k]) continue;
    bool ok = true;
    for (int j = 0; j < s.n && ok; ++j)
      if (!s.frozen[j] && s.omega[k][j] > 0) ok = false;
    if (ok) out.push_back(k + 1);
  }
  return out;
}

}  // namespace stringcone
