#include "operadlab/scalar.hpp"
#include <stdexcept>
#include <cctype>
#include <map>

namespace operadlab {

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{Int(text), Int(1)};
            r.canonicalize();
            return r;
        }
        Rational r{Int(text.substr(0, slash)), Int(text.substr(slash + 1))};
        if (sgn(r.get_den()) <= 0) throw std::invalid_argument("denominator must be positive");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: '" + text + "'");
    }
}

const Int& Scalar::as_int() const {
    if (ring() != Ring::INT) throw std::invalid_argument("scalar is not an integer");
    return std::get<Int>(v_);
}

const PolyQ& Scalar::as_poly() const {
    if (ring() != Ring::POLY) throw std::invalid_argument("scalar is not a polynomial");
    return std::get<PolyQ>(v_);
}

bool Scalar::is_zero() const {
    return ring() == Ring::INT ? as_int() == 0 : as_poly().is_zero();
}

void Scalar::check_same(const Scalar& o) const {
    if (ring() != o.ring()) throw std::invalid_argument("ring mismatch");
}

Scalar Scalar::operator-() const {
    return ring() == Ring::INT ? Scalar(Int(-as_int())) : Scalar(-as_poly());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    return ring() == Ring::INT ? Scalar(Int(as_int() + o.as_int()))
                               : Scalar(as_poly() + o.as_poly());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    return ring() == Ring::INT ? Scalar(Int(as_int() * o.as_int()))
                               : Scalar(as_poly() * o.as_poly());
}

std::pair<Scalar, Scalar> Scalar::divrem(const Scalar& b) const {
    check_same(b);
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (ring() == Ring::INT) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), as_int().get_mpz_t(), b.as_int().get_mpz_t());
        return {Scalar(q), Scalar(r)};
    }
    auto [q, r] = poly_divrem(as_poly(), b.as_poly());
    return {Scalar(q), Scalar(r)};
}

Scalar Scalar::divexact(const Scalar& b) const {
    auto [q, r] = divrem(b);
    if (!r.is_zero()) throw std::domain_error("inexact division");
    return q;
}

ScalarXgcd scalar_xgcd(const Scalar& a, const Scalar& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
    if (a.ring() == Ring::INT) {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
        return {Scalar(g), Scalar(s), Scalar(t)};
    }
    PolyXgcd r = poly_xgcd(a.as_poly(), b.as_poly());
    return {Scalar(r.g), Scalar(r.s), Scalar(r.t)};
}

Scalar Scalar::normalizing_unit() const {
    if (is_zero()) throw std::domain_error("zero has no normalizing unit");
    if (ring() == Ring::INT) return Scalar(Int(sgn(as_int()) > 0 ? 1 : -1));
    return Scalar(PolyQ(Rational(1) / as_poly().leading()));
}

bool Scalar::is_unit() const {
    if (ring() == Ring::INT) { Int a = abs(as_int()); return a == 1; }
    return !as_poly().is_zero() && as_poly().is_constant();
}

Scalar to_poly(const Scalar& s) {
    if (s.ring() == Ring::POLY) return s;
    return Scalar(PolyQ(Rational(s.as_int())));
}

Scalar scalar_from_rational(const Rational& r) { return Scalar(PolyQ(r)); }

// --- printing ----------------------------------------------------------------

std::string poly_to_string(const PolyQ& p) {
    if (p.is_zero()) return "0";
    if (p.is_constant()) return rational_to_string(p.coeff(0));
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rational c = p.coeff(static_cast<size_t>(d));
        if (c == 0) continue;
        bool first = out.empty();
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string sep = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string coef;
        if (d == 0) {
            coef = rational_to_string(mag);
        } else if (mag != 1) {
            bool frac = !is_integer(mag);
            // leading negative rationals keep the sign inside the parentheses
            if (frac && first && neg) { coef = "(-" + rational_to_string(mag) + ")*"; sep = ""; }
            else if (frac)            { coef = "(" + rational_to_string(mag) + ")*"; }
            else                      { coef = rational_to_string(mag) + "*"; }
        }
        std::string var;
        if (d == 1) var = "q";
        else if (d >= 2) var = "q^" + std::to_string(d);
        out += sep + coef + var;
    }
    return out;
}

std::string scalar_to_string(const Scalar& s) {
    return s.ring() == Ring::INT ? s.as_int().get_str() : poly_to_string(s.as_poly());
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) { skip_ws(); if (i < s.size() && s[i] == c) { ++i; return true; } return false; }
};

std::string read_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) throw std::invalid_argument("expected number in '" + c.s + "'");
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == dstart) throw std::invalid_argument("expected denominator in '" + c.s + "'");
    }
    return c.s.substr(start, c.i - start);
}

// one term: [coefficient] [*] [q [^ exponent]]
void parse_term(Cursor& c, int sign, std::map<int, Rational>& acc) {
    Rational coef(sign);
    bool have_coef = false;
    if (c.eat('(')) {
        coef *= parse_rational(read_number(c));
        if (!c.eat(')')) throw std::invalid_argument("unbalanced parenthesis in '" + c.s + "'");
        have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coef *= parse_rational(read_number(c));
        have_coef = true;
    }
    int deg = 0;
    bool star = c.eat('*');
    if (c.peek() == 'q') {
        c.eat('q');
        deg = 1;
        if (c.eat('^')) {
            std::string e = read_number(c);
            deg = std::stoi(e);
            if (deg < 0) throw std::invalid_argument("negative exponent");
        }
    } else {
        if (star) throw std::invalid_argument("dangling '*' in '" + c.s + "'");
        if (!have_coef) throw std::invalid_argument("empty term in '" + c.s + "'");
    }
    acc[deg] += coef;
}

} // namespace

PolyQ parse_poly(const std::string& text) {
    Cursor c{text};
    std::map<int, Rational> acc;
    int sign = 1;
    if (c.eat('-')) sign = -1;
    else c.eat('+');
    parse_term(c, sign, acc);
    while (!c.done()) {
        if (c.eat('+')) sign = 1;
        else if (c.eat('-')) sign = -1;
        else throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
        parse_term(c, sign, acc);
    }
    int maxdeg = -1;
    for (auto& [d, r] : acc)
        if (r != 0 && d > maxdeg) maxdeg = d;
    std::vector<Rational> coeffs(static_cast<size_t>(maxdeg + 1), Rational(0));
    for (auto& [d, r] : acc)
        if (d <= maxdeg) coeffs[static_cast<size_t>(d)] = r;
    return PolyQ(std::move(coeffs));
}

Scalar parse_scalar(const std::string& text, Ring ring) {
    if (ring == Ring::POLY) return Scalar(parse_poly(text));
    Cursor c{text};
    std::string num = read_number(c);
    if (!c.done() || num.find('/') != std::string::npos)
        throw std::invalid_argument("bad integer: '" + text + "'");
    return Scalar(Int(num));
}

} // namespace operadlab
