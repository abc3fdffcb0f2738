#include <doctest.h>

#include "test_support.hpp"
#include "vfcert/groebner.hpp"
#include "vfcert/parse.hpp"

using namespace vfcert;
using vfcert::testing::Gen;

namespace {

const std::vector<std::string> XY{"x", "y"};

Ideal I(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, vars));
    return Ideal::make(vars, ps);
}

}  // namespace

TEST_CASE("principal and linear ideals") {
    GroebnerBasis gb = buchberger(I(XY, {"x"}), MonomialOrder::grevlex());
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == parse_poly("x", XY));

    GroebnerBasis gb2 = buchberger(I(XY, {"x + y", "x - y"}), MonomialOrder::grevlex());
    REQUIRE(gb2.basis.size() == 2);
    CHECK(gb2.basis[0] == parse_poly("y", XY));
    CHECK(gb2.basis[1] == parse_poly("x", XY));
}

TEST_CASE("twisted cubic elimination") {
    std::vector<std::string> v{"z", "y", "x"};
    Ideal i = I(v, {"y - x^2", "z - x^3"});
    Ideal e = eliminate(i, {"z", "y"});
    REQUIRE(e.generators.size() == 1);
    CHECK(e.generators[0] == parse_poly("y^3 - z^2", {"z", "y"}));
}

TEST_CASE("normal form membership") {
    GroebnerBasis gb = buchberger(I(XY, {"x"}), MonomialOrder::grevlex());
    CHECK(normal_form(parse_poly("x^2", XY), gb).is_zero());
    CHECK(normal_form(parse_poly("x + 1", XY), gb) == parse_poly("1", XY));

    // invariance of the parabola: v = d/dx + 2x d/dy applied to y - x^2
    GroebnerBasis par = buchberger(I(XY, {"y - x^2"}), MonomialOrder::grevlex());
    Poly g = parse_poly("y - x^2", XY);
    Poly dv = g.partial_derivative(0) + parse_poly("2*x", XY) * g.partial_derivative(1);
    CHECK(normal_form(dv, par).is_zero());
}

TEST_CASE("elimination of jet images") {
    std::vector<std::string> v{"x", "y", "Y0", "Y1", "Y2"};
    Ideal i = I(v, {"Y0 - x", "Y1 - y", "Y2 + x"});
    Ideal e = eliminate(i, {"Y0", "Y1", "Y2"});
    REQUIRE(e.generators.size() == 1);
    CHECK(e.generators[0] == parse_poly("Y0 + Y2", {"Y0", "Y1", "Y2"}));

    Ideal two = eliminate(I({"x", "Y0", "Y1"}, {"Y0 - x", "Y1 - x"}), {"Y0", "Y1"});
    REQUIRE(two.generators.size() == 1);
    CHECK(two.generators[0] == parse_poly("Y0 - Y1", {"Y0", "Y1"}));

    Ideal none = eliminate(I(XY, {"x^2 + y^2 - 1"}), {"x"});
    CHECK(none.generators.empty());
}

TEST_CASE("zero dimensionality") {
    CHECK(is_zero_dimensional(buchberger(I(XY, {"x", "y"}), MonomialOrder::grevlex())));
    CHECK(!is_zero_dimensional(buchberger(I(XY, {"x"}), MonomialOrder::grevlex())));
    CHECK(is_zero_dimensional(
        buchberger(I(XY, {"x^2 - 1", "y^3 - y"}), MonomialOrder::grevlex())));
    // unit ideal: empty variety is zero dimensional
    CHECK(is_zero_dimensional(buchberger(I(XY, {"x", "x + 1"}), MonomialOrder::grevlex())));
}

TEST_CASE("normal form is idempotent and linear") {
    Gen gen(101);
    GroebnerBasis gb =
        buchberger(I(XY, {"x^2 + y^2 - 1", "x*y - 1"}), MonomialOrder::grevlex());
    for (int i = 0; i < 50; ++i) {
        Poly p = gen.poly(XY, 4, 5), q = gen.poly(XY, 4, 5);
        Poly np = normal_form(p, gb);
        CHECK(normal_form(np, gb) == np);
        Rational c = gen.rational();
        CHECK(normal_form(p.scaled(c) + q, gb) == np.scaled(c) + normal_form(q, gb));
    }
}

TEST_CASE("elimination output lies in the ideal") {
    std::vector<std::string> v{"t", "x", "y"};
    Ideal i = I(v, {"x - t^2", "y - t^3"});
    Ideal e = eliminate(i, {"x", "y"});
    GroebnerBasis gb = buchberger(i, MonomialOrder::grevlex());
    std::vector<std::size_t> emb{1, 2};
    for (const Poly& g : e.generators) {
        Poly lifted = g.embed(v, emb);
        CHECK(normal_form(lifted, gb).is_zero());
    }
}

TEST_CASE("membership in principal ideals agrees with exact division") {
    Gen gen(202);
    for (int i = 0; i < 40; ++i) {
        Poly g = gen.nonzero_poly(XY, 2);
        GroebnerBasis gb = buchberger(Ideal::make(XY, {g}), MonomialOrder::grevlex());
        Poly p = gen.poly(XY, 3);
        bool member = normal_form(p, gb).is_zero();
        bool divides = exact_divide(p, g).has_value();
        CHECK(member == divides);
    }
}

TEST_CASE("budget exhaustion raises") {
    GroebnerOptions tiny;
    tiny.step_budget = 2;
    std::vector<std::string> v{"x", "y", "z"};
    CHECK_THROWS_AS(
        buchberger(I(v, {"x^2 + y*z", "y^3 - z*x + x", "z^2*y - x*y + 1"}),
                   MonomialOrder::grevlex(), tiny),
        BudgetExhausted);
}

TEST_CASE("deterministic bases") {
    std::vector<std::string> v{"x", "y", "z"};
    Ideal i = I(v, {"x^2 + y^2 + z^2 - 1", "x*y - z", "x - y*z"});
    GroebnerBasis a = buchberger(i, MonomialOrder::grevlex());
    GroebnerBasis b = buchberger(i, MonomialOrder::grevlex());
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t k = 0; k < a.basis.size(); ++k)
        CHECK(a.basis[k].to_string() == b.basis[k].to_string());
    // generators reduce to zero against the basis
    for (const Poly& g : i.generators) CHECK(normal_form(g, a).is_zero());
}
