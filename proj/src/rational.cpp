#include "stringcone/rational.hpp"

#include "stringcone/errors.hpp"

namespace stringcone {

Rational make_rational(long num, long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw invalid_input("cannot parse rational: " + s);
  if (r.get_den() == 0) throw invalid_input("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

bool rational_is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace stringcone
