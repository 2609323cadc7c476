#include "stringcone/lie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace stringcone {

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  IntMatrix r(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& v) {
  const int n = static_cast<int>(a.size());
  IntVector r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
  return r;
}

std::vector<IntVector> compute_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<IntVector> roots;
  std::queue<IntVector> work;
  for (int i = 0; i < n; ++i) {
    IntVector a(n, 0);
    a[i] = 1;
    roots.insert(a);
    work.push(a);
  }
  while (!work.empty()) {
    IntVector r = work.front();
    work.pop();
    for (int i = 0; i < n; ++i) {
      // s_i(r) = r - <r, alpha_i^vee> alpha_i
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan[i][j] * r[j];
      IntVector s = r;
      s[i] -= pairing;
      const bool nonneg = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
      if (nonneg && roots.insert(s).second) work.push(s);
    }
  }
  std::vector<IntVector> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

void check_letter(const CartanDatum& c, int letter) {
  if (letter < 1 || letter > c.n()) throw invalid_input("letter out of range");
}

}  // namespace

CartanDatum cartan_matrix(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      if (rank < 1) throw invalid_input("type A requires rank >= 1");
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 4) throw invalid_input("type D requires rank >= 4");
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw invalid_input("type E requires rank 6, 7 or 8");
      edges.emplace_back(1, 3);
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
  }
  CartanDatum c;
  c.family = family;
  c.rank = rank;
  c.cartan.assign(rank, IntVector(rank, 0));
  for (int i = 0; i < rank; ++i) c.cartan[i][i] = 2;
  for (auto [a, b] : edges) {
    c.cartan[a - 1][b - 1] = -1;
    c.cartan[b - 1][a - 1] = -1;
  }
  c.positive_roots = compute_positive_roots(c.cartan);
  return c;
}

CartanDatum cartan_matrix(const std::string& type) {
  if (type.size() < 2) throw invalid_input("cannot parse type string: " + type);
  Family f;
  switch (type[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw invalid_input("unknown family in type string: " + type);
  }
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(type.substr(1), &used);
    if (used + 1 != type.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw invalid_input("cannot parse rank in type string: " + type);
  }
  return cartan_matrix(f, rank);
}

std::string type_string(const CartanDatum& c) {
  const char f = c.family == Family::A ? 'A' : (c.family == Family::D ? 'D' : 'E');
  return std::string(1, f) + std::to_string(c.rank);
}

Word parse_word(const std::string& text) {
  Word w;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  int v;
  while (in >> v) w.letters.push_back(v);
  if (!in.eof()) throw invalid_input("cannot parse word: " + text);
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

WeylElement identity_element(const CartanDatum& c) {
  return WeylElement{identity_matrix(c.n()), identity_matrix(c.n()), 0};
}

WeylElement simple_reflection(const CartanDatum& c, int i) {
  check_letter(c, i);
  const int n = c.n();
  // weight basis: (s_i lambda)_j = lambda_j - c_{j,i} lambda_i
  IntMatrix wt = identity_matrix(n);
  for (int j = 0; j < n; ++j) wt[j][i - 1] -= c.cartan[j][i - 1];
  // root basis: (s_i beta)_i = beta_i - sum_j c_{i,j} beta_j
  IntMatrix rt = identity_matrix(n);
  for (int j = 0; j < n; ++j) rt[i - 1][j] -= c.cartan[i - 1][j];
  WeylElement e{std::move(wt), std::move(rt), 1};
  return e;
}

int element_length(const CartanDatum& c, const IntMatrix& rt) {
  int inv = 0;
  for (const auto& beta : c.positive_roots) {
    const IntVector img = mat_vec(rt, beta);
    bool nonneg = true, nonpos = true;
    for (int x : img) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw convention_violation("root image is not a root");
    if (!nonneg) ++inv;
  }
  return inv;
}

WeylElement multiply(const CartanDatum& c, const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  r.wt = mat_mul(a.wt, b.wt);
  r.rt = mat_mul(a.rt, b.rt);
  r.length = element_length(c, r.rt);
  return r;
}

WordProps word_props(const CartanDatum& c, const Word& w) {
  WeylElement e = identity_element(c);
  for (int letter : w.letters) {
    check_letter(c, letter);
    e = multiply(c, e, simple_reflection(c, letter));
  }
  return WordProps{e, e.length == w.size(), e.length};
}

WeylElement longest_element(const CartanDatum& c) {
  WeylElement w = identity_element(c);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= c.n(); ++i) {
      WeylElement next = multiply(c, w, simple_reflection(c, i));
      if (next.length > w.length) {
        w = std::move(next);
        grew = true;
        break;
      }
    }
  }
  return w;
}

void reduced_words(const CartanDatum& c, const WeylElement& w,
                   const std::function<bool(const Word&)>& emit) {
  Word prefix;
  // Lexicographic stream: peel left descents in increasing letter order.
  std::function<bool(const WeylElement&)> rec = [&](const WeylElement& rest) -> bool {
    if (rest.length == 0) return emit(prefix);
    for (int i = 1; i <= c.n(); ++i) {
      WeylElement next = multiply(c, simple_reflection(c, i), rest);
      if (next.length < rest.length) {
        prefix.letters.push_back(i);
        const bool go_on = rec(next);
        prefix.letters.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  };
  rec(w);
}

std::vector<Word> reduced_words(const CartanDatum& c, const WeylElement& w,
                                std::optional<std::size_t> limit) {
  std::vector<Word> out;
  reduced_words(c, w, [&](const Word& word) {
    out.push_back(word);
    return !limit || out.size() < *limit;
  });
  return out;
}

Word apply_move(const CartanDatum& c, const Word& w, Move m) {
  const int N = w.size();
  Word r = w;
  if (m.kind == MoveKind::TwoTerm) {
    if (m.pos < 1 || m.pos > N - 1) throw invalid_input("2-term move position out of range");
    const int a = w.at(m.pos), b = w.at(m.pos + 1);
    if (c.c(a, b) != 0) throw invalid_input("2-term move requires commuting letters");
    std::swap(r.letters[m.pos - 1], r.letters[m.pos]);
  } else {
    if (m.pos < 2 || m.pos > N - 1) throw invalid_input("3-term move position out of range");
    const int a = w.at(m.pos - 1), b = w.at(m.pos), a2 = w.at(m.pos + 1);
    if (a != a2 || c.c(a, b) != -1)
      throw invalid_input("3-term move requires pattern (a,b,a) with adjacent letters");
    r.letters[m.pos - 2] = b;
    r.letters[m.pos - 1] = a;
    r.letters[m.pos] = b;
  }
  return r;
}

std::vector<std::pair<Word, Move>> word_neighbors(const CartanDatum& c, const Word& w) {
  std::vector<std::pair<Word, Move>> out;
  const int N = w.size();
  for (int k = 1; k <= N - 1; ++k) {
    if (c.c(w.at(k), w.at(k + 1)) == 0)
      out.emplace_back(apply_move(c, w, {MoveKind::TwoTerm, k}), Move{MoveKind::TwoTerm, k});
  }
  for (int k = 2; k <= N - 1; ++k) {
    if (w.at(k - 1) == w.at(k + 1) && c.c(w.at(k - 1), w.at(k)) == -1)
      out.emplace_back(apply_move(c, w, {MoveKind::ThreeTerm, k}), Move{MoveKind::ThreeTerm, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MoveSequence move_path(const CartanDatum& c, const Word& i, const Word& j) {
  const WordProps pi = word_props(c, i), pj = word_props(c, j);
  if (!pi.reduced || !pj.reduced) throw invalid_input("move_path requires reduced words");
  if (!(pi.element == pj.element))
    throw invalid_input("move_path between words of different elements");
  std::map<Word, std::pair<Word, Move>> parent;
  std::queue<Word> q;
  parent.emplace(i, std::make_pair(i, Move{MoveKind::TwoTerm, 0}));
  q.push(i);
  while (!q.empty() && !parent.count(j)) {
    const Word cur = q.front();
    q.pop();
    for (const auto& [next, mv] : word_neighbors(c, cur)) {
      if (parent.emplace(next, std::make_pair(cur, mv)).second) q.push(next);
    }
  }
  if (!parent.count(j)) throw convention_violation("word graph is disconnected");
  MoveSequence seq{i, j, {}};
  Word cur = j;
  while (!(cur == i)) {
    const auto& [prev, mv] = parent.at(cur);
    seq.moves.push_back(mv);
    cur = prev;
  }
  std::reverse(seq.moves.begin(), seq.moves.end());
  return seq;
}

std::vector<IntVector> convex_order(const CartanDatum& c, const Word& i) {
  if (!word_props(c, i).reduced) throw invalid_input("convex_order requires a reduced word");
  std::vector<IntVector> roots;
  WeylElement prefix = identity_element(c);
  for (int k = 1; k <= i.size(); ++k) {
    IntVector alpha(c.n(), 0);
    alpha[i.at(k) - 1] = 1;
    roots.push_back(mat_vec(prefix.rt, alpha));
    prefix = multiply(c, prefix, simple_reflection(c, i.at(k)));
  }
  return roots;
}

int k_plus(const Word& i, int k) {
  for (int l = k + 1; l <= i.size(); ++l)
    if (i.at(l) == i.at(k)) return l;
  return i.size() + 1;
}

int i_star(const CartanDatum& c, int letter) {
  check_letter(c, letter);
  const WeylElement w0 = longest_element(c);
  for (int j = 1; j <= c.n(); ++j) {
    bool match = true;
    for (int r = 1; r <= c.n(); ++r) {
      const int want = (r == j) ? -1 : 0;
      if (w0.wt[r - 1][letter - 1] != want) {
        match = false;
        break;
      }
    }
    if (match) return j;
  }
  throw convention_violation("w0 does not negate a fundamental weight");
}

namespace {

// Canonical reduced word: repeatedly extract the smallest left descent.
Word canonical_word(const CartanDatum& c, WeylElement w) {
  Word out;
  while (w.length > 0) {
    for (int i = 1; i <= c.n(); ++i) {
      WeylElement next = multiply(c, simple_reflection(c, i), w);
      if (next.length < w.length) {
        out.letters.push_back(i);
        w = std::move(next);
        break;
      }
    }
  }
  return out;
}

}  // namespace

CosetData coset_data(const CartanDatum& c, int letter) {
  check_letter(c, letter);
  // Longest element of the parabolic on the other letters.
  WeylElement wp = identity_element(c);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 1; j <= c.n(); ++j) {
      if (j == letter) continue;
      WeylElement next = multiply(c, wp, simple_reflection(c, j));
      if (next.length > wp.length) {
        wp = std::move(next);
        grew = true;
        break;
      }
    }
  }
  // Minimal representative of (parabolic) s_letter w0.
  WeylElement u = multiply(c, simple_reflection(c, letter), longest_element(c));
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int j = 1; j <= c.n(); ++j) {
      if (j == letter) continue;
      WeylElement next = multiply(c, simple_reflection(c, j), u);
      if (next.length < u.length) {
        u = std::move(next);
        shrunk = true;
        break;
      }
    }
  }
  return CosetData{canonical_word(c, wp), canonical_word(c, u)};
}

bool is_minuscule(const CartanDatum& c, int letter) {
  check_letter(c, letter);
  for (const auto& beta : c.positive_roots)
    if (beta[letter - 1] < -1 || beta[letter - 1] > 1) return false;
  return true;
}

}  // namespace stringcone
