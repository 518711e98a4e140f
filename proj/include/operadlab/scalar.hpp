#pragma once
#include "operadlab/polyq.hpp"
#include <variant>
#include <string>

namespace operadlab {

enum class Ring { INT, POLY };

inline const char* ring_name(Ring r) { return r == Ring::INT ? "Z" : "Q[q]"; }

// Exact scalar from one of the two Euclidean rings.  Mixed-ring arithmetic is
// an error by design: moving a value between rings is an explicit conversion.
class Scalar {
public:
    Scalar() : v_(Int(0)) {}
    explicit Scalar(Int z) : v_(std::move(z)) {}
    explicit Scalar(PolyQ p) : v_(std::move(p)) {}

    static Scalar zero(Ring r) { return r == Ring::INT ? Scalar(Int(0)) : Scalar(PolyQ()); }
    static Scalar one(Ring r)  { return r == Ring::INT ? Scalar(Int(1)) : Scalar(PolyQ::constant(1)); }

    Ring ring() const { return std::holds_alternative<Int>(v_) ? Ring::INT : Ring::POLY; }
    const Int& as_int() const;
    const PolyQ& as_poly() const;

    bool is_zero() const;
    bool operator==(const Scalar& o) const { return v_ == o.v_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;

    // Euclidean structure
    // INT: floor division, remainder in [0, |b|) for b > 0.
    // POLY: remainder zero or of degree < deg(divisor).
    std::pair<Scalar, Scalar> divrem(const Scalar& b) const;
    Scalar divexact(const Scalar& b) const;

    // a unit u such that u * (*this) is pivot-normalized (positive / monic);
    // *this must be nonzero
    Scalar normalizing_unit() const;
    bool is_unit() const;

private:
    void check_same(const Scalar& o) const;
    std::variant<Int, PolyQ> v_;
};

// g = s*a + t*b with g >= 0 (INT) or monic (POLY)
struct ScalarXgcd { Scalar g, s, t; };
ScalarXgcd scalar_xgcd(const Scalar& a, const Scalar& b);

// explicit ring coercions
Scalar to_poly(const Scalar& s);                      // Z -> Q[q] constants
Scalar scalar_from_rational(const Rational& r);       // constant in Q[q]

// --- text grammar -----------------------------------------------------------
// integers        -?[0-9]+
// rationals       <int>/<posint>
// polynomials     descending degree, explicit * and ^, e.g. "q^2 - 3*q + 1",
//                 rational coefficients parenthesized, e.g. "(-1/32768)*q^8"
std::string scalar_to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text, Ring ring);
PolyQ parse_poly(const std::string& text);
std::string poly_to_string(const PolyQ& p);

} // namespace operadlab
