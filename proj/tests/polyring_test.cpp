#include <doctest.h>

#include "test_support.hpp"
#include "vfcert/parse.hpp"
#include "vfcert/poly.hpp"
#include "vfcert/ratfunc.hpp"

using namespace vfcert;
using vfcert::testing::Gen;

namespace {

const std::vector<std::string> XY{"x", "y"};

Poly P(const std::string& s, const std::vector<std::string>& vars = XY) {
    return parse_poly(s, vars);
}

// Halphen component 1 with a symbolic parameter instantiated to a rational
Poly halphen1(const Rational& a1) {
    std::vector<std::string> v{"x1", "x2", "x3"};
    Poly x1 = Poly::variable(v, 0), x2 = Poly::variable(v, 1), x3 = Poly::variable(v, 2);
    Poly one_minus = Poly::constant(v, Rational(1) - a1);
    return x1 * x1 * Poly::constant(v, a1) + one_minus * (x1 * x2 + x1 * x3 - x2 * x3);
}

}  // namespace

TEST_CASE("parse denotation") {
    Poly p = P("3/2*x^2 + y");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(Monomial(std::vector<std::uint32_t>{2, 0})) == Rational(3, 2));
    CHECK(p.coeff(Monomial(std::vector<std::uint32_t>{0, 1})) == Rational(1));

    std::vector<std::string> jet{"y", "y'", "y''"};
    RatFunc f = parse_ratfunc("(y'')^2/y'", jet);
    CHECK(f.num() == P("y''^2", jet));
    CHECK(f.den() == P("y'", jet));

    RatFunc one = parse_ratfunc("x/x", XY);
    CHECK(one == RatFunc::constant(XY, Rational(1)));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("x + z", XY), ParseError);
    CHECK_THROWS_AS(parse_poly("x y", XY), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x/y", XY), ParseError);      // '/' needs rational mode
    CHECK_THROWS_AS(parse_ratfunc("x/(x - x)", XY), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", XY), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", XY), ParseError);
    try {
        parse_poly("x + q", XY);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^2*y").partial_derivative(0) == P("2*x*y"));
    CHECK(P("x^2").partial_derivative(1) == P("0"));

    Rational a1(1, 2);
    Poly h = halphen1(a1);
    std::vector<std::string> v{"x1", "x2", "x3"};
    CHECK(h.partial_derivative(0) == parse_poly("2*1/2*x1 + 1/2*x2 + 1/2*x3", v));
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("x^2 - y^2"), P("x - y")).value() == P("x + y"));
    CHECK(!exact_divide(P("x"), P("y")).has_value());
    Poly g = P("y^2 - x*y - x^2");
    CHECK(exact_divide(g, g).value() == P("1"));
    CHECK_THROWS(exact_divide(P("x"), P("0")));
}

TEST_CASE("evaluation") {
    CHECK(P("x^2 + y").evaluate({Rational(2), Rational(3)}) == Rational(7));
    Poly q = P("5*x^2*y - 2*x + 7/3");
    CHECK(q.evaluate({Rational(0), Rational(0)}) == q.constant_term());
    Poly h = halphen1(Rational(1, 2));
    CHECK(h.evaluate({Rational(0), Rational(0), Rational(0)}) == Rational(0));
}

TEST_CASE("ring axioms on random polynomials") {
    Gen gen(20240601);
    for (int i = 0; i < 100; ++i) {
        Poly a = gen.poly(XY, 3), b = gen.poly(XY, 3), c = gen.poly(XY, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("print/parse round trip") {
    Gen gen(7);
    for (int i = 0; i < 100; ++i) {
        Poly p = gen.poly(XY, 4, 6);
        CHECK(parse_poly(p.to_string(), XY) == p);
        Poly d = gen.nonzero_poly(XY, 2);
        RatFunc f(gen.poly(XY, 3), d);
        CHECK(parse_ratfunc(f.to_string(), XY) == f);
    }
}

TEST_CASE("mixed partials commute") {
    Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        Poly p = gen.poly(XY, 4, 6);
        CHECK(p.partial_derivative(0).partial_derivative(1) ==
              p.partial_derivative(1).partial_derivative(0));
    }
}

TEST_CASE("exact_divide recovers factors") {
    Gen gen(13);
    for (int i = 0; i < 100; ++i) {
        Poly p = gen.poly(XY, 3);
        Poly q = gen.nonzero_poly(XY, 3);
        CHECK(exact_divide(p * q, q).value() == p);
    }
}

TEST_CASE("Leibniz rule") {
    Gen gen(17);
    for (int i = 0; i < 100; ++i) {
        Poly p = gen.poly(XY, 3), q = gen.poly(XY, 3);
        CHECK((p * q).partial_derivative(0) ==
              p * q.partial_derivative(0) + q * p.partial_derivative(0));
    }
}

TEST_CASE("rational function reduction is canonical") {
    Gen gen(19);
    for (int i = 0; i < 50; ++i) {
        Poly a = gen.poly(XY, 2), b = gen.nonzero_poly(XY, 2), c = gen.nonzero_poly(XY, 2);
        RatFunc f(a, b);
        RatFunc g(a * c, b * c);
        CHECK(f == g);
    }
    RatFunc quotient = RatFunc(P("x^2 - y^2")) / RatFunc(P("x - y"));
    CHECK(quotient == RatFunc(P("x + y")));
}

TEST_CASE("quotient rule for rational functions") {
    Gen gen(23);
    for (int i = 0; i < 50; ++i) {
        RatFunc f(gen.poly(XY, 2), gen.nonzero_poly(XY, 2));
        RatFunc g(gen.poly(XY, 2), gen.nonzero_poly(XY, 2));
        RatFunc prod = f * g;
        CHECK(prod.partial_derivative(0) ==
              f * g.partial_derivative(0) + g * f.partial_derivative(0));
    }
}

TEST_CASE("degree conventions") {
    CHECK(P("0").degree() == kDegreeOfZero);
    CHECK(P("5").degree() == 0);
    CHECK(P("x*y^2 + x").degree() == 3);
}

TEST_CASE("gcd basics") {
    Poly g = poly_gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2"));
    CHECK(g == P("x + y"));
    CHECK(poly_gcd(P("0"), P("-2*x")) == P("x"));
    CHECK(poly_gcd(P("6*x*y"), P("4*y^2")) == P("y"));
}
