#pragma once

#include <gmpxx.h>

#include <string>

namespace gridtrail {

using Rational = mpq_class;

// "n" for integers, "p/q" (q > 0, reduced) otherwise.
std::string to_string(const Rational& q);

// Accepts "n" or "p/q" with an optional leading minus sign. Throws Error.
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& q);

}  // namespace gridtrail
