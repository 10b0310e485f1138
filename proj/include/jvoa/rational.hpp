#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jvoa {

// Arbitrary precision rationals. mpq_class keeps values canonical as long as
// every constructor path goes through make_rational or canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" in lowest terms, denominator always printed.
std::string to_fraction_string(const Rational& q);

// Human form: "3", "-1/2".
std::string to_string(const Rational& q);

// Accepts "p", "p/q", with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Binomial coefficient C(m, i) for any integer m and i >= 0 (C(m, 0) = 1).
// Built from the Pascal recursion C(m, i) = C(m-1, i-1) + C(m-1, i), extended
// to negative m by running it downward from row 0.
Integer binomial(long m, long i);

}  // namespace jvoa
