#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ghstab {

/// Exact arbitrary-precision rational; always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an integer (`-12`), a decimal (`34.5`, `1.5e-3`) or a fraction (`3/4`).
/// Decimals are converted exactly, so `0.1` is 1/10. Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

/// Canonical text: `p/q` with q > 1, or plain `p` for integers.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

/// num / den in canonical form (the two-argument mpq constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace ghstab
