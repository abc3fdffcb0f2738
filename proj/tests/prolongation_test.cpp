#include <doctest.h>

#include "test_support.hpp"
#include "vfcert/parse.hpp"
#include "vfcert/prolongation.hpp"

using namespace vfcert;
using vfcert::testing::Gen;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XY12{"x", "y", "y1", "y2"};

VectorField VF(const std::vector<std::string>& vars, const std::vector<std::string>& comps) {
    std::vector<RatFunc> cs;
    for (const auto& c : comps) cs.push_back(parse_ratfunc(c, vars));
    return VectorField(vars, cs);
}

VectorField random_poly_field(Gen& gen, const std::vector<std::string>& vars, int deg) {
    std::vector<Poly> cs;
    for (std::size_t i = 0; i < vars.size(); ++i) cs.push_back(gen.poly(vars, deg));
    return VectorField::from_polys(vars, cs);
}

}  // namespace

TEST_CASE("prolongation formula") {
    ProlongedField p = first_prolongation(VF(XY, {"y", "x"}));
    CHECK(p.fiber_vars == std::vector<std::string>{"y1", "y2"});
    CHECK(p.full.component(0) == parse_ratfunc("y", XY12));
    CHECK(p.full.component(1) == parse_ratfunc("x", XY12));
    CHECK(p.full.component(2) == parse_ratfunc("-1*y2", XY12));
    CHECK(p.full.component(3) == parse_ratfunc("-1*y1", XY12));

    ProlongedField c = first_prolongation(VF({"x"}, {"1"}));
    CHECK(c.full.component(1).is_zero());

    ProlongedField e = first_prolongation(VF({"x"}, {"x"}));
    CHECK(e.full.component(0) == parse_ratfunc("x", {"x", "y1"}));
    CHECK(e.full.component(1) == parse_ratfunc("-1*y1", {"x", "y1"}));

    CHECK_THROWS(first_prolongation(VF(XY, {"x/y", "0"})));
}

TEST_CASE("fiber variable names avoid collisions") {
    auto names = fiber_variable_names({"y", "y'", "y''"});
    CHECK(names == std::vector<std::string>{"y1", "y2", "y3"});
    auto clash = fiber_variable_names({"y1", "x"});
    CHECK(clash == std::vector<std::string>{"yf1", "yf2"});
}

TEST_CASE("tautological forms") {
    CHECK(tautological_form(VF(XY, {"x", "2*y"})) == parse_poly("x*y1 + 2*y*y2", XY12));
    CHECK(tautological_form(VectorField::zero(XY)).is_zero());
}

TEST_CASE("canonical hypersurface") {
    HorizontalIdeal h = canonical_hypersurface(VF(XY, {"x", "2*y"}));
    REQUIRE(h.ideal.generators.size() == 1);
    CHECK(h.ideal.generators[0] == parse_poly("x*y1 + 2*y*y2", XY12));

    HorizontalIdeal dx = canonical_hypersurface(VF(XY, {"1", "0"}));
    CHECK(dx.ideal.generators[0] == parse_poly("y1", XY12));

    HorizontalIdeal rot = canonical_hypersurface(VF(XY, {"y", "x"}));
    CHECK(rot.ideal.generators[0] == parse_poly("y*y1 + x*y2", XY12));

    CHECK_THROWS(canonical_hypersurface(VectorField::zero(XY)));
}

TEST_CASE("horizontal invariance checks") {
    Gen gen(61);
    for (int i = 0; i < 10; ++i) {
        VectorField v = random_poly_field(gen, XY, 2);
        if (v.is_zero()) continue;
        ProlongedField pv = first_prolongation(v);
        CHECK(check_horizontal_invariant(pv, canonical_hypersurface(v)) == Check::True);
    }

    VectorField diag = VF(XY, {"x", "2*y"});
    HorizontalIdeal y2 = HorizontalIdeal::make(XY, {"y1", "y2"}, {parse_poly("y2", XY12)});
    CHECK(check_horizontal_invariant(first_prolongation(diag), y2) == Check::True);

    VectorField rot = VF(XY, {"y", "x"});
    CHECK(check_horizontal_invariant(first_prolongation(rot), y2) == Check::False);
}

TEST_CASE("conormal ideals of coordinate distributions") {
    HorizontalIdeal h1 = distribution_conormal_ideal({VF(XY, {"1", "0"})});
    REQUIRE(h1.ideal.generators.size() == 1);
    CHECK(h1.ideal.generators[0] == parse_poly("y1", XY12));

    std::vector<std::string> xyz{"x", "y", "z"};
    std::vector<std::string> xyz123{"x", "y", "z", "y1", "y2", "y3"};
    HorizontalIdeal h2 = distribution_conormal_ideal(
        {VF(xyz, {"1", "0", "0"}), VF(xyz, {"0", "1", "0"})});
    REQUIRE(h2.ideal.generators.size() == 2);
    CHECK(h2.ideal.generators[0] == parse_poly("y1", xyz123));
    CHECK(h2.ideal.generators[1] == parse_poly("y2", xyz123));

    // dependent spanning set is rejected with a witness
    CHECK_THROWS_AS(distribution_conormal_ideal({VF(XY, {"x", "y"}), VF(XY, {"2*x", "2*y"})}),
                    std::invalid_argument);
}

TEST_CASE("Schwarzian foliation cone is invariant") {
    // v1 scaled by y*y' to clear denominators; the span is unchanged
    std::vector<std::string> jet{"y", "y'", "y''"};
    VectorField w1 = VF(jet, {"y*y'*y'", "y*y'*y''", "-1*y'^4 + 3/2*y*y''^2"});
    VectorField v2 = VF(jet, {"0", "y'", "2*y''"});
    HorizontalIdeal cone = distribution_conormal_ideal({w1, v2}, 7);
    CHECK(check_horizontal_invariant(first_prolongation(w1), cone) == Check::True);
}

TEST_CASE("Bott restriction identity") {
    CHECK(bott_restriction_check(VF(XY, {"x", "2*y"}), parse_poly("x", XY)));
    Gen gen(67);
    VectorField v = random_poly_field(gen, XY, 2);
    while (v.is_zero()) v = random_poly_field(gen, XY, 2);
    CHECK(bott_restriction_check(v, parse_poly("7/3", XY)));
}

TEST_CASE("prolongation duality and first integral") {
    Gen gen(71);
    std::vector<std::string> xyz{"x", "y", "z"};
    for (int i = 0; i < 40; ++i) {
        const auto& vars = (i % 2 == 0) ? XY : xyz;
        VectorField v = random_poly_field(gen, vars, 2);
        if (v.is_zero()) continue;
        ProlongedField pv = first_prolongation(v);
        for (int k = 0; k < 3; ++k) {
            VectorField xi = random_poly_field(gen, vars, 2);
            Poly lhs = apply_derivation(pv.full, RatFunc(tautological_form(xi, pv.fiber_vars)))
                           .as_poly();
            Poly rhs = tautological_form(lie_bracket(v, xi), pv.fiber_vars);
            CHECK(lhs == rhs);
        }
        CHECK(apply_derivation(pv.full, RatFunc(tautological_form(v, pv.fiber_vars))).is_zero());
    }
}

TEST_CASE("prolongations are linear in the fibers") {
    Gen gen(73);
    for (int i = 0; i < 30; ++i) {
        VectorField v = random_poly_field(gen, XY, 2);
        ProlongedField pv = first_prolongation(v);
        std::size_t n = v.dimension();
        for (std::size_t k = 0; k < n; ++k) {
            Poly comp = pv.full.poly_component(n + k);
            for (const auto& [m, c] : comp.terms()) {
                int fdeg = 0;
                for (std::size_t j = n; j < 2 * n; ++j) fdeg += static_cast<int>(m.exp(j));
                CHECK(fdeg == 1);
            }
        }
    }
}

TEST_CASE("random Bott property run") {
    Gen gen(79);
    std::vector<std::string> xyz{"x", "y", "z"};
    for (int i = 0; i < 100; ++i) {
        const auto& vars = (i % 2 == 0) ? XY : xyz;
        VectorField v = random_poly_field(gen, vars, 2);
        if (v.is_zero()) continue;
        Poly f = gen.poly(vars, 2);
        CHECK(bott_restriction_check(v, f));
    }
}
