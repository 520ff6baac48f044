#include "powersum/valuation.hpp"

#include "powersum/polyio.hpp"

#include <doctest.h>

using namespace powersum;

TEST_CASE("valuations at finite places and infinity") {
    const RatFunc f = parse_ratfunc("x^2/(x-1)");
    CHECK(valuation(f, Poly::x()) == 2);
    CHECK(valuation(f, parse_poly("x-1")) == -1);
    CHECK(valuation_at_infinity(f) == -1);
    CHECK(valuation(parse_ratfunc("(x^3+1)/(x-2)"), parse_poly("x-2")) == -1);
    CHECK_THROWS(valuation(RatFunc(0), Poly::x()));
}

TEST_CASE("height equals max degree and place enumeration") {
    CHECK(height(parse_ratfunc("x^3-3*x")).value() == 3);
    CHECK(height(parse_ratfunc("5/7")).value() == 0);
    CHECK(height(parse_ratfunc("(x^3+1)/(x-2)")).value() == 3);
    CHECK(height(parse_ratfunc("(x^2-1)/x")).value() == 2);
    CHECK_THROWS(height(RatFunc(0)));
    CHECK(to_string(HeightValue::infinite()) == "infinity");

    for (const char* s : {"x^3-3*x", "(x^3+1)/(x-2)", "(x^2-1)/x", "x/(x^4+4)", "-2/3"}) {
        const RatFunc f = parse_ratfunc(s);
        CHECK(height(f).value() == height_by_places(f));
    }
}

TEST_CASE("tuple height is projective") {
    const RatFunc x(Poly::x());
    const RatFunc inv_x = RatFunc(1) / x;
    CHECK(height_tuple({RatFunc(1), parse_ratfunc("(x^2-1)/x")}).value() == 2);
    CHECK(height_tuple({x, inv_x}).value() == 2);
    CHECK(height_tuple({RatFunc(2), RatFunc(-7)}).value() == 0);
    // zero entries are skipped; (0 : x) is the constant projective point (0 : 1)
    CHECK(height_tuple({RatFunc(0), x}).value() == 0);
    CHECK(height_tuple({RatFunc(0), x, RatFunc(1)}).value() == 1);
    CHECK_THROWS(height_tuple({RatFunc(0), RatFunc(0)}));
    CHECK_THROWS(height_tuple({}));
}

TEST_CASE("support and sum formula") {
    const auto rep = check_sum_formula(parse_ratfunc("(x^2+1)/x"));
    CHECK(rep.holds);
    CHECK(rep.weighted_sum == 0);
    bool saw_quadratic = false, saw_x = false, saw_inf = false;
    for (const auto& e : rep.entries) {
        if (e.place.at_infinity) {
            saw_inf = true;
            CHECK(e.valuation == -1);
        } else if (e.place.prime == parse_poly("x^2+1")) {
            saw_quadratic = true;
            CHECK(e.valuation == 1);
            CHECK(e.place.degree() == 2);
        } else if (e.place.prime == Poly::x()) {
            saw_x = true;
            CHECK(e.valuation == -1);
        }
    }
    CHECK(saw_quadratic);
    CHECK(saw_x);
    CHECK(saw_inf);

    CHECK(check_sum_formula(parse_ratfunc("(x-1)^3")).holds);
    CHECK(check_sum_formula(parse_ratfunc("7")).entries.empty());
}

TEST_CASE("joint support rows") {
    const auto rows = joint_support({parse_ratfunc("x"), parse_ratfunc("1/x")});
    REQUIRE(rows.size() == 2);  // the place x and infinity
    for (const auto& row : rows) {
        REQUIRE(row.valuations.size() == 2);
        CHECK(row.valuations[0] == -row.valuations[1]);
    }
}

TEST_CASE("height equality conditions") {
    const auto good = check_height_equality_conditions(parse_ratfunc("x"), parse_ratfunc("1/(x-1)"));
    CHECK(good.sum_applicable);
    CHECK(good.sum_equality);
    CHECK(!good.prod_applicable);  // v(f) v(g) = 0 on the disjoint supports

    const auto cancel = check_height_equality_conditions(parse_ratfunc("x"), parse_ratfunc("-x"));
    CHECK(!cancel.sum_applicable);
    REQUIRE(!cancel.notes.empty());

    const auto monomials = check_height_equality_conditions(parse_ratfunc("x^2"), parse_ratfunc("x^3"));
    CHECK(monomials.prod_applicable);
    CHECK(monomials.prod_equality);

    const auto mixed = check_height_equality_conditions(parse_ratfunc("x"), parse_ratfunc("1/x"));
    CHECK(!mixed.prod_applicable);
}
