#include "operadlab/polyq.hpp"

namespace operadlab {

PolyQ PolyQ::operator-() const {
    std::vector<Rational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    std::vector<Rational> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return PolyQ(std::move(out));
}

Rational PolyQ::eval(const Rational& q0) const {
    Rational v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * q0 + c_[i];
    return v;
}

std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& dividend, const PolyQ& divisor) {
    if (divisor.is_zero()) throw std::domain_error("zero divisor");
    std::vector<Rational> r = dividend.coeffs();
    int dd = divisor.degree();
    const Rational& lc = divisor.leading();
    std::vector<Rational> q;
    if (dividend.degree() >= dd) q.assign(dividend.degree() - dd + 1, Rational(0));
    while (true) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        int dr = static_cast<int>(r.size()) - 1;
        if (dr < dd) break;
        Rational c = r.back() / lc;
        q[dr - dd] = c;
        for (int i = 0; i <= dd; ++i) r[dr - dd + i] -= c * divisor.coeff(i);
    }
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyXgcd poly_xgcd(const PolyQ& f, const PolyQ& g0) {
    PolyQ r0 = f, r1 = g0;
    PolyQ s0 = PolyQ::constant(1), s1;
    PolyQ t0, t1 = PolyQ::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = r1; r1 = r;
        PolyQ s2 = s0 - q * s1; s0 = s1; s1 = s2;
        PolyQ t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv; s0 = s0 * inv; t0 = t0 * inv;
    }
    return {r0, s0, t0};
}

} // namespace operadlab
