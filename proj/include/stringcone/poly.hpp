#pragma once

#include <map>
#include <string>
#include <vector>

#include "stringcone/errors.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

// Exponent vector of a Laurent monomial; fixed length per ambient chart.
using ExponentVec = std::vector<int>;

enum class Chart { X, x };

// Sparse multivariate Laurent polynomial over exact rationals.  No zero
// coefficients are stored; terms iterate in lexicographic exponent order.
class LaurentPoly {
 public:
  LaurentPoly() : vars_(0), chart_(Chart::X) {}
  explicit LaurentPoly(int vars, Chart chart = Chart::X) : vars_(vars), chart_(chart) {}

  static LaurentPoly monomial(int vars, const Rational& coeff, const ExponentVec& exps,
                              Chart chart = Chart::X);
  static LaurentPoly constant(int vars, const Rational& c, Chart chart = Chart::X);
  static LaurentPoly variable(int vars, int index1, int power = 1, Chart chart = Chart::X);

  int vars() const { return vars_; }
  Chart chart() const { return chart_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentVec, Rational>& terms() const { return terms_; }

  Rational coeff(const ExponentVec& e) const;
  void add_term(const ExponentVec& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly pow(unsigned e) const;
  LaurentPoly divided_by_monomial(const ExponentVec& m) const;
  LaurentPoly with_chart(Chart chart) const;

  // All coefficients positive integers.
  bool positive_integer_coeffs() const;

  std::string str() const;

 private:
  int vars_;
  Chart chart_;
  std::map<ExponentVec, Rational> terms_;

  void check_compatible(const LaurentPoly& o) const;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly divide_by_monomial(const LaurentPoly& p, const ExponentVec& m);

// Exact division; throws not_divisible when q does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Monomial substitution X_k := prod_l x_l^{E[k][l]}: a term with exponent
// vector a maps to exponent vector a^T E (coefficients unchanged).
// Requires an X-chart input; the result is tagged as the x-chart.
LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<std::vector<int>>& E);

// Same exponent remap without chart bookkeeping (internal helper).
LaurentPoly remap_exponents(const LaurentPoly& p, const std::vector<std::vector<int>>& E,
                            Chart out_chart);

// Min-plus shadow of a subtraction-free Laurent polynomial: the support
// exponent vectors, each annotated with its (merged) coefficient.
struct TropicalForm {
  int vars = 0;
  std::vector<std::pair<ExponentVec, Rational>> forms;  // lex-sorted, distinct
};

TropicalForm tropicalize(const LaurentPoly& p);
long long eval_tropical(const TropicalForm& f, const std::vector<long long>& t);
long long dot(const ExponentVec& u, const std::vector<long long>& t);

// Every exponent of every monomial has absolute value <= 1.
bool is_multiplicity_free(const LaurentPoly& p);

}  // namespace stringcone
