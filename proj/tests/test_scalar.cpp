#include <doctest.h>
#include <operadlab/scalar.hpp>

using namespace operadlab;

TEST_CASE("rational construction canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(is_canonical(make_rational(10, 15)));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("5/7") == make_rational(5, 7));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(is_integer(Rational(4)));
    CHECK(!is_integer(make_rational(1, 2)));
}

TEST_CASE("polynomial normalization and degree") {
    PolyQ zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    PolyQ trimmed(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(trimmed.degree() == 0);
    CHECK(PolyQ::q().degree() == 1);
    CHECK(PolyQ::constant(5).is_constant());
    CHECK(!PolyQ::q().is_constant());
}

TEST_CASE("polynomial arithmetic") {
    PolyQ q = PolyQ::q();
    PolyQ p = (q + PolyQ::constant(1)) * (q + PolyQ::constant(1));  // (q+1)^2
    CHECK(p == parse_poly("q^2 + 2*q + 1"));
    CHECK(p - parse_poly("q^2") == parse_poly("2*q + 1"));
    CHECK((q * q * q - PolyQ::constant(1)).eval(Rational(2)) == Rational(7));
    CHECK((-q).leading() == Rational(-1));
}

TEST_CASE("polynomial division") {
    auto [quot, rem] = poly_divrem(parse_poly("q^3 - 1"), parse_poly("q - 1"));
    CHECK(quot == parse_poly("q^2 + q + 1"));
    CHECK(rem.is_zero());

    auto [q2, r2] = poly_divrem(parse_poly("q^2 + 1"), parse_poly("2*q"));
    CHECK(q2 == parse_poly("(1/2)*q"));
    CHECK(r2 == PolyQ::constant(1));
    CHECK_THROWS(poly_divrem(PolyQ::q(), PolyQ()));
}

TEST_CASE("polynomial extended gcd") {
    PolyXgcd x = poly_xgcd(parse_poly("q^2 - 1"), parse_poly("q^2 - 2*q + 1"));
    CHECK(x.g == parse_poly("q - 1"));
    CHECK(x.s * parse_poly("q^2 - 1") + x.t * parse_poly("q^2 - 2*q + 1") == x.g);
    CHECK(x.g.is_monic());

    PolyXgcd coprime = poly_xgcd(parse_poly("q"), parse_poly("q + 1"));
    CHECK(coprime.g == PolyQ::constant(1));
}

TEST_CASE("polynomial text round trips") {
    for (const char* text : {"q^2 - 3*q + 1", "q + 3", "-q - 3", "q - 1", "-q + 1", "0", "1",
                             "(1/2)*q^2 - q", "(-1/2)*q", "q^8 - (1/32768)*q^2"}) {
        PolyQ p = parse_poly(text);
        CHECK(poly_to_string(p) == text);
    }
    // compact input is accepted, spaced output is canonical
    CHECK(poly_to_string(parse_poly("q+3")) == "q + 3");
    CHECK(poly_to_string(parse_poly("q^2-3*q+1")) == "q^2 - 3*q + 1");
}

TEST_CASE("scalar ring separation") {
    Scalar a(Int(2));
    Scalar p(PolyQ::q());
    CHECK(a.ring() == Ring::INT);
    CHECK(p.ring() == Ring::POLY);
    CHECK_THROWS(a + p);
    CHECK_THROWS(a * p);
    CHECK(to_poly(a) == Scalar(PolyQ::constant(2)));
    CHECK(scalar_from_rational(make_rational(1, 2)) ==
          Scalar(PolyQ(make_rational(1, 2))));
}

TEST_CASE("integer divrem is floor division") {
    auto check_divrem = [](long a, long b, long q, long r) {
        auto [qq, rr] = Scalar(Int(a)).divrem(Scalar(Int(b)));
        CHECK(qq == Scalar(Int(q)));
        CHECK(rr == Scalar(Int(r)));
    };
    check_divrem(7, 3, 2, 1);
    check_divrem(-7, 3, -3, 2);  // remainder lands in [0, b)
    check_divrem(6, 3, 2, 0);
    check_divrem(-6, 3, -2, 0);
}

TEST_CASE("scalar units and normalization") {
    CHECK(Scalar(Int(1)).is_unit());
    CHECK(Scalar(Int(-1)).is_unit());
    CHECK(!Scalar(Int(2)).is_unit());
    CHECK(Scalar(Int(-5)).normalizing_unit() == Scalar(Int(-1)));
    CHECK(Scalar(PolyQ::constant(3)).is_unit());
    CHECK(!Scalar(PolyQ::q()).is_unit());
    // normalizing 2q gives the monic q
    Scalar two_q(PolyQ::q() * Rational(2));
    CHECK(two_q.normalizing_unit() * two_q == Scalar(PolyQ::q()));
}

TEST_CASE("scalar extended gcd") {
    ScalarXgcd x = scalar_xgcd(Scalar(Int(12)), Scalar(Int(18)));
    CHECK(x.g == Scalar(Int(6)));
    CHECK(x.s * Scalar(Int(12)) + x.t * Scalar(Int(18)) == x.g);

    ScalarXgcd p = scalar_xgcd(Scalar(parse_poly("q^2 - 1")), Scalar(parse_poly("q + 1")));
    CHECK(p.g == Scalar(parse_poly("q + 1")));
    CHECK_THROWS(scalar_xgcd(Scalar(Int(1)), Scalar(PolyQ::q())));
}

TEST_CASE("scalar divexact") {
    CHECK(Scalar(Int(-12)).divexact(Scalar(Int(4))) == Scalar(Int(-3)));
    CHECK(Scalar(parse_poly("q^2 - 1")).divexact(Scalar(parse_poly("q - 1"))) ==
          Scalar(parse_poly("q + 1")));
}

TEST_CASE("scalar text round trips") {
    CHECK(scalar_to_string(Scalar(Int(-42))) == "-42");
    CHECK(parse_scalar("-42", Ring::INT) == Scalar(Int(-42)));
    CHECK(parse_scalar("q + 3", Ring::POLY) == Scalar(parse_poly("q + 3")));
    CHECK(scalar_to_string(parse_scalar("q+3", Ring::POLY)) == "q + 3");
    CHECK_THROWS(parse_scalar("q + 3", Ring::INT));
    CHECK_THROWS(parse_scalar("not a number", Ring::INT));
    CHECK_THROWS(parse_poly("q^"));
}
