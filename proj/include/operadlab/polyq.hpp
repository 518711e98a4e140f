#pragma once
#include "operadlab/rational.hpp"
#include <vector>
#include <utility>

namespace operadlab {

// Univariate polynomial in q over the rationals, dense coefficients,
// index = degree.  Normalized: no trailing zero coefficients, so the zero
// polynomial has an empty coefficient vector.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const Rational& c) { if (c != 0) c_.push_back(c); }
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ q() { return PolyQ(std::vector<Rational>{Rational(0), Rational(1)}); }
    static PolyQ constant(long n) { return PolyQ(Rational(n)); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention here
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rational& s) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    Rational eval(const Rational& q0) const;

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<Rational> c_;
};

// dividend = divisor*quotient + remainder, remainder zero or of smaller degree
std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& dividend, const PolyQ& divisor);

struct PolyXgcd { PolyQ g, s, t; };  // s*f + t*g0 = g, g monic or zero
PolyXgcd poly_xgcd(const PolyQ& f, const PolyQ& g0);

inline Rational poly_eval(const PolyQ& f, const Rational& q0) { return f.eval(q0); }

} // namespace operadlab
