#include "stringcone/poly.hpp"

#include <algorithm>
#include <sstream>

namespace stringcone {

namespace {

ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int vars, const Rational& coeff, const ExponentVec& exps,
                                  Chart chart) {
  if (static_cast<int>(exps.size()) != vars)
    throw invalid_input("monomial exponent vector has wrong length");
  LaurentPoly p(vars, chart);
  p.add_term(exps, coeff);
  return p;
}

LaurentPoly LaurentPoly::constant(int vars, const Rational& c, Chart chart) {
  return monomial(vars, c, ExponentVec(vars, 0), chart);
}

LaurentPoly LaurentPoly::variable(int vars, int index1, int power, Chart chart) {
  if (index1 < 1 || index1 > vars) throw invalid_input("variable index out of range");
  ExponentVec e(vars, 0);
  e[index1 - 1] = power;
  return monomial(vars, 1, e, chart);
}

Rational LaurentPoly::coeff(const ExponentVec& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_)
    throw invalid_input("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (vars_ != o.vars_) throw invalid_input("ambient variable counts differ");
  if (chart_ != o.chart_) throw invalid_input("chart tags differ");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_, chart_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r(vars_, chart_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(vars_, 1, chart_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::divided_by_monomial(const ExponentVec& m) const {
  if (static_cast<int>(m.size()) != vars_) throw invalid_input("monomial has wrong length");
  LaurentPoly r(vars_, chart_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(exp_sub(e, m), c);
  return r;
}

LaurentPoly LaurentPoly::with_chart(Chart chart) const {
  LaurentPoly r = *this;
  r.chart_ = chart;
  return r;
}

bool LaurentPoly::positive_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0 || !rational_is_integer(c)) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const char* base = chart_ == Chart::X ? "X" : "x";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool printed = false;
    if (c != 1) {
      out << rational_str(c);
      printed = true;
    }
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << base << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      printed = true;
    }
    if (!printed) out << "1";
  }
  return out.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly divide_by_monomial(const LaurentPoly& p, const ExponentVec& m) {
  return p.divided_by_monomial(m);
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.vars() != q.vars()) throw invalid_input("ambient variable counts differ");
  if (q.is_zero()) throw invalid_input("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.vars(), p.chart());

  const int n = p.vars();
  // Quotient exponents live in the box [min(p)-max(q), max(p)-min(q)].
  ExponentVec lo(n), hi(n);
  {
    ExponentVec pmin(n, 0), pmax(n, 0), qmin(n, 0), qmax(n, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      (void)c;
      for (int i = 0; i < n; ++i) {
        if (first || e[i] < pmin[i]) pmin[i] = e[i];
        if (first || e[i] > pmax[i]) pmax[i] = e[i];
      }
      first = false;
    }
    first = true;
    for (const auto& [e, c] : q.terms()) {
      (void)c;
      for (int i = 0; i < n; ++i) {
        if (first || e[i] < qmin[i]) qmin[i] = e[i];
        if (first || e[i] > qmax[i]) qmax[i] = e[i];
      }
      first = false;
    }
    for (int i = 0; i < n; ++i) {
      lo[i] = pmin[i] - qmax[i];
      hi[i] = pmax[i] - qmin[i];
    }
  }

  LaurentPoly rem = p;
  LaurentPoly quot(p.vars(), p.chart());
  const auto& qlt = *q.terms().rbegin();  // lex-leading divisor term
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms().rbegin();
    const ExponentVec qe = exp_sub(rlt.first, qlt.first);
    for (int i = 0; i < n; ++i)
      if (qe[i] < lo[i] || qe[i] > hi[i]) throw not_divisible("polynomial division has remainder");
    const Rational qc = rlt.second / qlt.second;
    quot.add_term(qe, qc);
    rem = rem - q * LaurentPoly::monomial(n, qc, qe, p.chart()).with_chart(q.chart());
  }
  return quot;
}

LaurentPoly remap_exponents(const LaurentPoly& p, const std::vector<std::vector<int>>& E,
                            Chart out_chart) {
  const int n = p.vars();
  if (static_cast<int>(E.size()) != n) throw invalid_input("substitution matrix has wrong size");
  for (const auto& row : E)
    if (static_cast<int>(row.size()) != n)
      throw invalid_input("substitution matrix has wrong size");
  LaurentPoly r(n, out_chart);
  for (const auto& [e, c] : p.terms()) {
    ExponentVec ne(n, 0);
    for (int k = 0; k < n; ++k) {
      if (e[k] == 0) continue;
      for (int l = 0; l < n; ++l) ne[l] += e[k] * E[k][l];
    }
    r.add_term(ne, c);
  }
  return r;
}

LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<std::vector<int>>& E) {
  if (p.chart() != Chart::X) throw invalid_input("substitute_monomials expects an X-chart input");
  return remap_exponents(p, E, Chart::x);
}

TropicalForm tropicalize(const LaurentPoly& p) {
  TropicalForm f;
  f.vars = p.vars();
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) throw invalid_input("tropicalization requires a subtraction-free polynomial");
    f.forms.emplace_back(e, c);
  }
  return f;
}

long long dot(const ExponentVec& u, const std::vector<long long>& t) {
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * t[i];
  return s;
}

long long eval_tropical(const TropicalForm& f, const std::vector<long long>& t) {
  if (static_cast<int>(t.size()) != f.vars) throw invalid_input("point has wrong length");
  if (f.forms.empty()) throw invalid_input("tropical form of the zero polynomial");
  long long best = dot(f.forms.front().first, t);
  for (std::size_t i = 1; i < f.forms.size(); ++i)
    best = std::min(best, dot(f.forms[i].first, t));
  return best;
}

bool is_multiplicity_free(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    for (int x : e)
      if (x < -1 || x > 1) return false;
  }
  return true;
}

}  // namespace stringcone
