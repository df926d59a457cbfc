#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mahon {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (positive denominator, gcd(num, den) = 1) after every arithmetic
// operation, which is the equality contract the rest of the library
// relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Serialized as "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational ring_scale(const Rational& a, const Integer& m) {
    return Rational(a * m);
}

}  // namespace mahon
