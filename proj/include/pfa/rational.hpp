#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pfa {

// Exact arbitrary-precision scalars. All arithmetic in the decision path is
// over these; no floating point anywhere.
using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(p, q) does not canonicalize; every construction from a
// numerator/denominator pair must go through here.
Rational ratio(const Int& num, const Int& den);
Rational ratio(long num, long den);

inline Rational normalized(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c;
}

inline bool is_canonical(const Rational& r) {
    return normalized(r) == r && r.get_den() > 0;
}

// Parses "p/q" or "p" (optional leading '-'); result is reduced with a
// positive denominator. Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& token);

// Emits "p/q", or "p" when the denominator is 1. parse_rational(format(r)) == r.
std::string format_rational(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

// Number of bits in the binary representation of n >= 1.
// bins(1) = 1, bins(4) = 3, bins(7) = 3.
unsigned long bins(const Int& n);

// Smallest integer >= r.
Int ceil_rational(const Rational& r);

// Largest integer <= r.
Int floor_rational(const Rational& r);

// base^exp for exp >= 0. Throws std::overflow_error when exp does not fit
// an unsigned long (such a value could not be materialized anyway).
Rational pow_rational(const Rational& base, const Int& exp);

}  // namespace pfa
