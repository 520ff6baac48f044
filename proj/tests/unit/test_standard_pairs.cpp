#include "powersum/standard_pairs.hpp"

#include "powersum/polyio.hpp"

#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <string>

using namespace powersum;

namespace {

bool throws_containing(const std::string& needle, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("pair kind names round trip") {
    CHECK(to_string(PairKind::Third) == "third");
    CHECK(pair_kind_from_string("fifth") == PairKind::Fifth);
    CHECK(pair_kind_from_string(to_string(PairKind::Specific)) == PairKind::Specific);
    CHECK_THROWS_AS(pair_kind_from_string("sixth"), std::invalid_argument);
}

TEST_CASE("first kind") {
    PairParams pp;
    pp.m = 3;
    pp.n = 1;
    pp.a = 2;
    pp.p = parse_poly("x+1");
    const auto sp = make_standard_pair(PairKind::First, pp);
    CHECK(sp.left == parse_poly("x^3"));
    CHECK(sp.right == parse_poly("2*x^4 + 6*x^3 + 6*x^2 + 2*x"));

    PairParams bad = pp;
    bad.m = 4;
    bad.n = 2;
    CHECK(throws_containing("gcd(n, m) = 1", [&] { make_standard_pair(PairKind::First, bad); }));
    bad = pp;
    bad.n = 5;
    CHECK_THROWS_AS(make_standard_pair(PairKind::First, bad), std::invalid_argument);
    bad = pp;
    bad.a = 0;
    CHECK_THROWS_AS(make_standard_pair(PairKind::First, bad), std::invalid_argument);
    bad = pp;
    bad.n = 0;
    bad.m = 1;
    bad.p = Poly(5);
    CHECK(throws_containing("n + deg p > 0", [&] { make_standard_pair(PairKind::First, bad); }));
}

TEST_CASE("second kind") {
    PairParams pp;
    pp.a = 1;
    pp.b = -2;
    pp.p = parse_poly("x-1");
    const auto sp = make_standard_pair(PairKind::Second, pp);
    CHECK(sp.left == parse_poly("x^2"));
    CHECK(sp.right == parse_poly("(x^2-2)*(x-1)^2"));
    PairParams bad = pp;
    bad.p = Poly();
    CHECK_THROWS_AS(make_standard_pair(PairKind::Second, bad), std::invalid_argument);
}

TEST_CASE("third kind uses crossed Dickson parameters") {
    PairParams pp;
    pp.m = 3;
    pp.n = 2;
    pp.a = 2;
    const auto sp = make_standard_pair(PairKind::Third, pp);
    CHECK(sp.left == parse_poly("x^3 - 12*x"));
    CHECK(sp.right == parse_poly("x^2 - 16"));

    PairParams bad = pp;
    bad.n = 6;
    CHECK(throws_containing("gcd(m, n) = 1", [&] { make_standard_pair(PairKind::Third, bad); }));
}

TEST_CASE("fourth kind scales Dickson polynomials") {
    PairParams pp;
    pp.m = 2;
    pp.n = 4;
    pp.a = 3;
    pp.b = 2;
    const auto sp = make_standard_pair(PairKind::Fourth, pp);
    CHECK(sp.left == parse_poly("1/3*x^2 - 2"));
    CHECK(sp.right == parse_poly("-1/4*x^4 + 2*x^2 - 2"));

    PairParams bad = pp;
    bad.m = 3;
    bad.n = 6;
    CHECK(throws_containing("gcd(m, n) = 2", [&] { make_standard_pair(PairKind::Fourth, bad); }));
}

TEST_CASE("fifth kind") {
    PairParams pp;
    pp.a = 1;
    const auto sp = make_standard_pair(PairKind::Fifth, pp);
    CHECK(sp.left == parse_poly("(x^2-1)^3"));
    CHECK(sp.right == parse_poly("3*x^4 - 4*x^3"));
    PairParams bad;
    bad.a = 0;
    CHECK_THROWS_AS(make_standard_pair(PairKind::Fifth, bad), std::invalid_argument);
}

TEST_CASE("specific kind only at gcd 3") {
    PairParams pp;
    pp.m = 3;
    pp.n = 6;
    pp.r = 2;
    const auto sp = make_standard_pair(PairKind::Specific, pp);
    CHECK(sp.left == parse_poly("x^3 - 12*x"));
    CHECK(sp.right == parse_poly("-1/64*x^6 + 3/4*x^4 - 9*x^2 + 16"));

    PairParams d4;
    d4.m = 4;
    d4.n = 8;
    d4.r = 1;
    CHECK(throws_containing("ambiguous and refused", [&] { make_standard_pair(PairKind::Specific, d4); }));

    PairParams d5;
    d5.m = 5;
    d5.n = 10;
    d5.r = 1;
    CHECK(throws_containing("pair not defined over Q", [&] { make_standard_pair(PairKind::Specific, d5); }));

    PairParams d1;
    d1.m = 2;
    d1.n = 3;
    d1.r = 1;
    CHECK_THROWS_AS(make_standard_pair(PairKind::Specific, d1), std::invalid_argument);
}

TEST_CASE("bilu-tichy shape witness") {
    PairParams pp;
    pp.m = 3;
    pp.n = 2;
    pp.a = 2;
    const auto sp = make_standard_pair(PairKind::Third, pp);
    const Poly phi = parse_poly("2*x + 1");
    const Poly lam = parse_poly("x - 1");
    const Poly mu = parse_poly("3*x");
    const Poly f = phi.compose(sp.left.compose(lam));
    const Poly g = phi.compose(sp.right.compose(mu));
    CHECK(verify_bilu_tichy_shape(f, g, phi, sp, lam, mu));
    CHECK(!verify_bilu_tichy_shape(f, g + Poly(1), phi, sp, lam, mu));
    CHECK_THROWS_AS(verify_bilu_tichy_shape(f, g, phi, sp, parse_poly("x^2"), mu),
                    std::invalid_argument);
}

TEST_CASE("third kind exclusion grid") {
    const Poly alpha = parse_poly("2*x^2 + x + 1");
    const Poly a1 = parse_poly("x^2 - 3/2*x");
    const std::vector<PowerSumTerm> u = {{a1, alpha}, {Poly(1), Poly(1)}};

    std::vector<std::array<Rational, 4>> grid = {
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(1), Rational(0), Rational(1)},
        {Rational(1), Rational(2), Rational(3), Rational(4)},
        {Rational(0), Rational(1), Rational(1), Rational(1)},
    };
    const auto rep = exclusion_check_third_kind(u, 3, 5, grid);
    CHECK(rep.p == 5);
    CHECK(rep.ell == 8);
    CHECK(rep.all_excluded);
    REQUIRE(rep.grid.size() == 4);
    CHECK(rep.grid[0].admissible);
    CHECK(rep.grid[0].excluded);
    CHECK(rep.grid[1].coeff_top == 0);
    CHECK(rep.grid[1].coeff_second == Rational(-10));
    CHECK(rep.grid[1].excluded);
    CHECK(rep.grid[2].coeff_top == Rational(240));
    CHECK(rep.grid[2].coeff_second == Rational(560));
    CHECK(!rep.grid[3].admissible);
    CHECK(!rep.grid[3].excluded);
    CHECK(!rep.notes.empty());

    CHECK_THROWS_AS(exclusion_check_third_kind(u, 3, 4, grid), std::invalid_argument);
    const std::vector<PowerSumTerm> untuned = {{parse_poly("x^2 + 1"), alpha}, {Poly(1), Poly(1)}};
    CHECK_THROWS_AS(exclusion_check_third_kind(untuned, 3, 5, grid), std::invalid_argument);
}
