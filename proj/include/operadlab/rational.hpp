#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace operadlab {

using Int = mpz_class;

// mpq_class does not canonicalize on construction from num/den, so all
// construction goes through these helpers.  GMP keeps results of arithmetic
// canonical as long as the operands are.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r.get_num() == 0 ? r.get_den() == 1 : g == 1;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// parses "-3" or "5/7"; used by the scalar grammar
Rational parse_rational(const std::string& text);

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

} // namespace operadlab
