#include "gridtrail/rational.hpp"

#include "gridtrail/error.hpp"

namespace gridtrail {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

bool is_integer(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw Error("invalid rational '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw Error("invalid rational '" + s + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) throw Error("invalid rational '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("invalid rational '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace gridtrail
