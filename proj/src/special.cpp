#include "stringcone/special.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "stringcone/polyhedral.hpp"

namespace stringcone {

namespace {

IntVector simple_root(const CartanDatum& c, int letter) {
  IntVector a(c.n(), 0);
  a[letter - 1] = 1;
  return a;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  const int n = static_cast<int>(m.size());
  IntVector r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace

std::optional<SimplyBraidedWitness> simply_braided(const CartanDatum& c, const Word& i,
                                                   int letter, const Conventions& conv) {
  if (!word_props(c, i).reduced) throw invalid_input("simply_braided requires a reduced word");
  const int constraint = conv.simply_braided_plain_root ? letter : i_star(c, letter);
  const IntVector alpha = simple_root(c, constraint);

  // Breadth-first search over the words reachable with 2-term moves and
  // constrained 3-term moves; the constrained component is finite, so an
  // exhausted search proves absence.
  std::map<Word, std::pair<Word, Move>> parent;
  std::queue<Word> q;
  parent.emplace(i, std::make_pair(i, Move{MoveKind::TwoTerm, 0}));
  q.push(i);
  std::optional<Word> found;
  if (i.letters.back() == letter) found = i;
  while (!q.empty() && !found) {
    const Word cur = q.front();
    q.pop();
    const auto roots = convex_order(c, cur);
    for (const auto& [next, mv] : word_neighbors(c, cur)) {
      if (mv.kind == MoveKind::ThreeTerm && roots[mv.pos - 2] != alpha)
        continue;  // the constraint root must be the leftmost affected
      if (!parent.emplace(next, std::make_pair(cur, mv)).second) continue;
      if (next.letters.back() == letter) {
        found = next;
        break;
      }
      q.push(next);
    }
  }
  if (!found) return std::nullopt;
  SimplyBraidedWitness w;
  w.seq.source = i;
  w.seq.target = *found;
  Word cur = *found;
  while (!(cur == i)) {
    const auto& [prev, mv] = parent.at(cur);
    w.seq.moves.push_back(mv);
    cur = prev;
  }
  std::reverse(w.seq.moves.begin(), w.seq.moves.end());

  // Replay to record, per 3-term move, the middle affected root's index in
  // the source order and the mutated vertex traced back to source labels.
  std::map<IntVector, int> root_index;
  {
    const auto roots = convex_order(c, i);
    for (std::size_t k = 0; k < roots.size(); ++k) root_index.emplace(roots[k], k + 1);
  }
  const int N = i.size();
  std::vector<int> to_current(N);  // source label (0-based) -> current label
  for (int v = 0; v < N; ++v) to_current[v] = v;
  Word word = i;
  for (const Move& mv : w.seq.moves) {
    if (mv.kind == MoveKind::ThreeTerm) {
      const auto roots = convex_order(c, word);
      w.middle_root_indices.push_back(root_index.at(roots[mv.pos - 1]));
      int src = 0;
      for (int v = 0; v < N; ++v)
        if (to_current[v] == mv.pos - 2) src = v;
      w.tube_labels.push_back(src + 1);
    }
    for (int v = 0; v < N; ++v) {
      if (to_current[v] == mv.pos - 1)
        to_current[v] = mv.pos;
      else if (to_current[v] == mv.pos)
        to_current[v] = mv.pos - 1;
    }
    word = apply_move(c, word, mv);
  }
  return w;
}

LaurentPoly tubes_potential(const CartanDatum& c, const Word& i, int letter,
                            const SimplyBraidedWitness& w, const Conventions& conv) {
  if (!(w.seq.source == i)) throw invalid_input("witness does not start at the word");
  const int constraint = conv.simply_braided_plain_root ? letter : i_star(c, letter);
  const IntVector alpha = simple_root(c, constraint);
  const int N = i.size();
  // Replay the sequence, re-checking the constraint, the recorded middle-root
  // indices and the traced tube labels.
  std::map<IntVector, int> root_index;
  {
    const auto roots = convex_order(c, i);
    for (std::size_t k = 0; k < roots.size(); ++k) root_index.emplace(roots[k], k + 1);
  }
  std::vector<int> to_current(N);
  for (int v = 0; v < N; ++v) to_current[v] = v;
  Word cur = i;
  std::size_t mcount = 0;
  for (const Move& mv : w.seq.moves) {
    if (mv.kind == MoveKind::ThreeTerm) {
      const auto roots = convex_order(c, cur);
      if (roots[mv.pos - 2] != alpha)
        throw invalid_input("witness move does not have the constraint root leftmost");
      if (mcount >= w.middle_root_indices.size() ||
          w.middle_root_indices[mcount] != root_index.at(roots[mv.pos - 1]))
        throw invalid_input("witness middle-root index mismatch");
      int src = 0;
      for (int v = 0; v < N; ++v)
        if (to_current[v] == mv.pos - 2) src = v;
      if (mcount >= w.tube_labels.size() || w.tube_labels[mcount] != src + 1)
        throw invalid_input("witness tube label mismatch");
      ++mcount;
    }
    for (int v = 0; v < N; ++v) {
      if (to_current[v] == mv.pos - 1)
        to_current[v] = mv.pos;
      else if (to_current[v] == mv.pos)
        to_current[v] = mv.pos - 1;
    }
    cur = apply_move(c, cur, mv);
  }
  if (mcount != w.middle_root_indices.size() || cur.letters.back() != letter)
    throw invalid_input("witness does not reach a word ending in the letter");

  const int f = frozen_vertex_of_letter(i, letter);
  // Prefix products accumulate from the last move inward.
  LaurentPoly sum = LaurentPoly::constant(N, 1, Chart::X);
  ExponentVec prefix(N, 0);
  for (auto it = w.tube_labels.rbegin(); it != w.tube_labels.rend(); ++it) {
    prefix[*it - 1] -= 1;
    sum = sum + LaurentPoly::monomial(N, 1, prefix, Chart::X);
  }
  return LaurentPoly::variable(N, f, -1, Chart::X) * sum;
}

namespace {

// Fundamental weight `node` is minuscule inside the subdiagram spanned by
// `nodes`: every root supported on the subdiagram pairs with it in {-1,0,1}.
bool minuscule_in_subdiagram(const CartanDatum& c, int node, const std::vector<int>& nodes) {
  std::vector<char> in(c.n() + 1, 0);
  for (int v : nodes) in[v] = 1;
  for (const auto& beta : c.positive_roots) {
    bool supported = true;
    for (int j = 1; j <= c.n() && supported; ++j)
      if (beta[j - 1] != 0 && !in[j]) supported = false;
    if (supported && (beta[node - 1] < -1 || beta[node - 1] > 1)) return false;
  }
  return true;
}

std::vector<WeylElement> enumerate_subgroup(const CartanDatum& c, const std::vector<int>& gens,
                                            std::size_t cap) {
  std::map<IntMatrix, WeylElement> seen;
  std::queue<WeylElement> q;
  WeylElement e = identity_element(c);
  seen.emplace(e.wt, e);
  q.push(e);
  while (!q.empty()) {
    WeylElement cur = q.front();
    q.pop();
    for (int g : gens) {
      WeylElement next = multiply(c, cur, simple_reflection(c, g));
      if (seen.emplace(next.wt, next).second) {
        if (seen.size() > cap) throw limit_exceeded("Weyl group enumeration cap exceeded");
        q.push(next);
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [wt, el] : seen) {
    (void)wt;
    out.push_back(std::move(el));
  }
  return out;
}

Word canonical_word_of(const CartanDatum& c, WeylElement w) {
  Word out;
  while (w.length > 0) {
    for (int j = 1; j <= c.n(); ++j) {
      WeylElement next = multiply(c, simple_reflection(c, j), w);
      if (next.length < w.length) {
        out.letters.push_back(j);
        w = std::move(next);
        break;
      }
    }
  }
  return out;
}

}  // namespace

NiceMachinery nice_machinery(const CartanDatum& c, std::size_t weyl_cap) {
  if (c.family == Family::E && c.rank == 8)
    throw invalid_input("nice words are not available in type E8");
  NiceMachinery out;
  std::vector<int> perm(c.n());
  for (int j = 0; j < c.n(); ++j) perm[j] = j + 1;
  do {
    bool good = true;
    for (int pos = 0; pos < c.n() && good; ++pos) {
      std::vector<int> remaining(perm.begin() + pos, perm.end());
      if (!minuscule_in_subdiagram(c, perm[pos], remaining)) good = false;
    }
    if (good) out.good_enumerations.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& en : out.good_enumerations) out.nice_words.push_back(nice_word(c, en, weyl_cap));
  return out;
}

Word nice_word(const CartanDatum& c, const std::vector<int>& enumeration, std::size_t weyl_cap) {
  if (c.family == Family::E && c.rank == 8)
    throw invalid_input("nice words are not available in type E8");
  if (static_cast<int>(enumeration.size()) != c.n())
    throw invalid_input("enumeration must list every node once");
  Word result;
  for (int j = 1; j <= c.n(); ++j) {
    const std::vector<int> gens(enumeration.begin(), enumeration.begin() + j);
    const std::vector<int> prev_gens(enumeration.begin(), enumeration.begin() + (j - 1));
    const auto group = enumerate_subgroup(c, gens, weyl_cap);
    // Longest minimal representative of the previous parabolic's cosets.
    const WeylElement* best = nullptr;
    Word best_word;
    for (const auto& el : group) {
      bool minimal = true;
      for (int g : prev_gens) {
        if (multiply(c, simple_reflection(c, g), el).length < el.length) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      if (!best || el.length > best->length) {
        best = &el;
        best_word = canonical_word_of(c, el);
      } else if (el.length == best->length) {
        Word cand = canonical_word_of(c, el);
        if (cand < best_word) {
          best = &el;
          best_word = std::move(cand);
        }
      }
    }
    result.letters.insert(result.letters.end(), best_word.letters.begin(),
                          best_word.letters.end());
  }
  const WordProps props = word_props(c, result);
  if (!props.reduced || props.length != c.N())
    throw convention_violation("assembled word is not a reduced word of the longest element");
  return result;
}

NiceConeReport nice_cone_report(const CartanDatum& c, const Word& i, const Conventions& conv) {
  NiceConeReport rep;
  const StringSystem sys = string_system(c, i, conv);
  rep.multiplicity_free_all_letters = true;
  for (const auto& [letter, data] : sys.letters) {
    (void)letter;
    if (!is_multiplicity_free(data.poly)) rep.multiplicity_free_all_letters = false;
  }
  const InequalitySystem full = system_from_string_system(sys);
  const InequalitySystem core = facets(full);
  rep.facet_count = core.entries.size();

  // Pairwise order inequalities t_k >= t_{k'} for k <= k' in the word order.
  std::vector<ExponentVec> literal;
  const int N = i.size();
  for (int k = 1; k <= N; ++k)
    for (int k2 = k + 1; k2 <= N; ++k2) {
      ExponentVec f(N, 0);
      f[k - 1] = 1;
      f[k2 - 1] = -1;
      literal.push_back(std::move(f));
    }
  rep.literal_count = literal.size();

  bool equal = true;
  for (const auto& entry : core.entries) {
    if (!farkas_member(entry.form, literal)) {
      rep.facets_not_implied_by_literal.push_back(entry.form);
      equal = false;
    }
  }
  std::vector<ExponentVec> core_forms;
  for (const auto& entry : core.entries) core_forms.push_back(entry.form);
  for (const auto& f : literal) {
    if (!farkas_member(f, core_forms)) {
      rep.literal_not_implied_by_facets.push_back(f);
      equal = false;
    }
  }
  rep.literal_system_equals_cone = equal;
  return rep;
}

// ---------------------------------------------------------------------------
// Minuscule oracles.

std::set<ExponentVec> trail_forms_subword(const CartanDatum& c, const Word& i, int letter,
                                          const Conventions& conv) {
  if (!is_minuscule(c, letter)) throw invalid_input("subword oracle requires a minuscule letter");
  if (!word_props(c, i).reduced) throw invalid_input("subword oracle requires a reduced word");
  const int t = conv.trail_plain_endpoints ? letter : i_star(c, letter);
  const CosetData coset = coset_data(c, t);
  const WordProps u = word_props(c, coset.u);
  const int N = i.size();

  // Enumerate subwords of i that are reduced words for u.  The partial
  // product and its inverse are tracked so that extensions can be pruned by
  // the weak-order prefix condition l(partial^{-1} u) = l(u) - l(partial).
  std::vector<std::vector<int>> subwords;
  std::vector<int> chosen;
  std::function<void(int, const WeylElement&, const WeylElement&)> rec =
      [&](int pos, const WeylElement& partial, const WeylElement& partial_inv) {
        const int taken = static_cast<int>(chosen.size());
        if (taken == u.length) {
          if (partial == u.element) subwords.push_back(chosen);
          return;
        }
        if (pos > N || u.length - taken > N - pos + 1) return;
        // Skip the position.
        rec(pos + 1, partial, partial_inv);
        // Take the position when it stays a prefix of u.
        const int a = i.at(pos);
        WeylElement ext = multiply(c, partial, simple_reflection(c, a));
        if (ext.length == taken + 1) {
          WeylElement ext_inv = multiply(c, simple_reflection(c, a), partial_inv);
          if (multiply(c, ext_inv, u.element).length == u.length - taken - 1) {
            chosen.push_back(pos);
            rec(pos + 1, ext, ext_inv);
            chosen.pop_back();
          }
        }
      };
  rec(1, identity_element(c), identity_element(c));

  std::set<ExponentVec> out;
  for (const auto& sub : subwords) {
    const int p = static_cast<int>(sub.size());
    // Prefix products of the chosen reflections.
    std::vector<WeylElement> prefix{identity_element(c)};
    for (int j = 0; j < p; ++j)
      prefix.push_back(multiply(c, prefix.back(), simple_reflection(c, i.at(sub[j]))));
    ExponentVec d(N, 0);
    std::size_t next = 0;
    for (int pos = 1; pos <= N; ++pos) {
      if (next < sub.size() && sub[next] == pos) {
        d[pos - 1] = 0;
        ++next;
        continue;
      }
      std::size_t idx = next;
      if (conv.subword_product_shifted && idx < sub.size()) ++idx;
      const IntVector root = mat_vec(prefix[idx].rt, simple_root(c, i.at(pos)));
      d[pos - 1] = root[t - 1];
    }
    out.insert(std::move(d));
  }
  return out;
}

std::vector<Trail> enumerate_trails(const CartanDatum& c, const Word& i, int letter,
                                    const Conventions& conv) {
  if (!is_minuscule(c, letter)) throw invalid_input("trail enumeration requires a minuscule letter");
  if (!word_props(c, i).reduced) throw invalid_input("trail enumeration requires a reduced word");
  const int t = conv.trail_plain_endpoints ? letter : i_star(c, letter);
  const int n = c.n();
  const int N = i.size();

  IntVector start(n, 0);
  start[t - 1] = 1;
  IntVector s_t = start;
  for (int j = 0; j < n; ++j) s_t[j] -= c.cartan[t - 1][j];  // s_t(omega_t polytope vertex)
  const WeylElement w0 = longest_element(c);
  IntVector end = mat_vec(w0.wt, s_t);

  // Backward reachability over (position, weight) states in the orbit model.
  std::map<IntVector, int> index;
  std::vector<IntVector> weights;
  {
    std::queue<IntVector> q;
    index.emplace(start, 0);
    weights.push_back(start);
    q.push(start);
    while (!q.empty()) {
      IntVector cur = q.front();
      q.pop();
      for (int j = 1; j <= n; ++j) {
        IntVector img = cur;
        const int pairing = cur[j - 1];
        for (int r = 0; r < n; ++r) img[r] -= pairing * c.cartan[j - 1][r];
        if (index.emplace(img, static_cast<int>(weights.size())).second) {
          weights.push_back(img);
          q.push(img);
        }
      }
    }
  }
  if (!index.count(end)) throw convention_violation("end weight is outside the orbit");
  const int W = static_cast<int>(weights.size());
  std::vector<std::vector<char>> reach(N + 1, std::vector<char>(W, 0));
  reach[N][index.at(end)] = 1;
  for (int pos = N; pos >= 1; --pos) {
    const int a = i.at(pos);
    for (int w = 0; w < W; ++w) {
      const IntVector& g = weights[w];
      bool r = reach[pos][w] != 0;  // stay
      if (!r && g[a - 1] == 1) {    // step down by the letter's coroot
        IntVector down = g;
        for (int r2 = 0; r2 < n; ++r2) down[r2] -= c.cartan[a - 1][r2];
        if (reach[pos][index.at(down)]) r = true;
      }
      reach[pos - 1][w] = r ? 1 : 0;
    }
  }

  std::vector<Trail> out;
  Trail cur;
  cur.weights.push_back(start);
  std::function<void(int, int)> rec = [&](int pos, int w) {
    if (pos > N) {
      if (weights[w] == end) out.push_back(cur);
      return;
    }
    if (!reach[pos - 1][w]) return;
    const int a = i.at(pos);
    const IntVector& g = weights[w];
    // stay
    if (reach[pos][w]) {
      cur.c.push_back(0);
      cur.d.push_back(g[a - 1]);
      cur.weights.push_back(g);
      rec(pos + 1, w);
      cur.c.pop_back();
      cur.d.pop_back();
      cur.weights.pop_back();
    }
    // step
    if (g[a - 1] == 1) {
      IntVector down = g;
      for (int r2 = 0; r2 < n; ++r2) down[r2] -= c.cartan[a - 1][r2];
      const int wd = index.at(down);
      if (reach[pos][wd]) {
        cur.c.push_back(1);
        cur.d.push_back(0);
        cur.weights.push_back(down);
        rec(pos + 1, wd);
        cur.c.pop_back();
        cur.d.pop_back();
        cur.weights.pop_back();
      }
    }
  };
  rec(1, index.at(start));
  return out;
}

std::set<ExponentVec> trail_forms(const std::vector<Trail>& trails) {
  std::set<ExponentVec> out;
  for (const Trail& t : trails) out.insert(ExponentVec(t.d.begin(), t.d.end()));
  return out;
}

}  // namespace stringcone
