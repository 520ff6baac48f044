#include "powersum/decompose.hpp"

#include "powersum/cheb_dickson.hpp"
#include "powersum/polyio.hpp"

#include <doctest.h>

using namespace powersum;

TEST_CASE("decompose_step normal form") {
    const auto t6 = decompose_step(chebyshev(6), 2);
    REQUIRE(t6.has_value());
    CHECK(t6->first == parse_poly("32*x^3 - 48*x^2 + 18*x - 1"));
    CHECK(t6->second == parse_poly("x^2"));
    CHECK(t6->first.compose(t6->second) == chebyshev(6));

    const auto none = decompose_step(parse_poly("x^4+x+1"), 2);
    CHECK(!none.has_value());

    CHECK_THROWS(decompose_step(parse_poly("x^3"), 2));      // deg < 4
    CHECK_THROWS(decompose_step(parse_poly("x^6"), 4));      // r does not divide
    CHECK_THROWS(decompose_step(parse_poly("x^6"), 6));      // r = deg f
}

TEST_CASE("full decomposition chains") {
    const auto chain = full_decomposition(parse_poly("x^6-3*x^3+2"));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == parse_poly("x^2 - 3*x + 2"));
    CHECK(chain[1] == parse_poly("x^3"));

    CHECK(full_decomposition(parse_poly("x^5+x+1")).size() == 1);  // prime degree
    CHECK(full_decomposition(parse_poly("x^4+x+1")).size() == 1);  // indecomposable

    const auto t12 = full_decomposition(chebyshev(12));
    Poly rebuilt = t12[0];
    for (size_t i = 1; i < t12.size(); ++i) rebuilt = rebuilt.compose(t12[i]);
    CHECK(rebuilt == chebyshev(12));
    for (const auto& part : t12) CHECK(part.deg() >= 2);
    CHECK(t12.size() == 3);  // 12 = 2 * 2 * 3, all indecomposable layers
}

TEST_CASE("classify cyclic") {
    const Poly h = Rational(2) * parse_poly("(3*x+1)^4") - Poly(7);
    const auto tag = classify_shape(h);
    CHECK(tag.kind == ShapeKind::Cyclic);
    CHECK(tag.n == 4);
    REQUIRE(tag.l1.has_value());
    REQUIRE(tag.l2.has_value());
    CHECK(tag.l1->compose(Poly::x().pow(4).compose(*tag.l2)) == h);

    const auto quad = classify_shape(parse_poly("x^2+5*x+6"));
    CHECK(quad.kind == ShapeKind::Cyclic);  // every quadratic is cyclic
}

TEST_CASE("classify dihedral") {
    const Poly h = Rational(3) * chebyshev(4).compose(parse_poly("x-2")) + Poly(1);
    const auto tag = classify_shape(h);
    CHECK(tag.kind == ShapeKind::Dihedral);
    CHECK(tag.n == 4);
    REQUIRE(tag.l1.has_value());
    REQUIRE(tag.l2.has_value());
    CHECK(*tag.l1 == parse_poly("3*x+1"));
    CHECK(*tag.l2 == parse_poly("x-2"));
    CHECK(tag.l1->compose(chebyshev(4).compose(*tag.l2)) == h);
}

TEST_CASE("classify neither, with scaling note") {
    const auto plain = classify_shape(parse_poly("x^3+x+1"));
    CHECK(plain.kind == ShapeKind::Neither);

    // x^3 - 6x is Dickson with r = 2: the Chebyshev conjugation exists only
    // after adjoining an irrational scale, which the note reports.
    const auto dickson_like = classify_shape(parse_poly("x^3-6*x"));
    CHECK(dickson_like.kind == ShapeKind::Neither);
    CHECK(dickson_like.note.find("irrational scaling") != std::string::npos);
}

TEST_CASE("solve_outer recovers inner polynomial") {
    const Poly u = parse_poly("x^2+1");
    const Poly q = parse_poly("x^3-x");
    const auto found = solve_outer(u, u.compose(q));
    REQUIRE(found.has_value());
    CHECK(*found == q);

    CHECK(!solve_outer(parse_poly("x^2"), parse_poly("x^2+1")).has_value());
    CHECK(!solve_outer(parse_poly("x^3"), parse_poly("x^4")).has_value());

    // constant target: smallest rational root of U - V
    const auto root = solve_outer(parse_poly("x^2-4"), Poly(0));
    REQUIRE(root.has_value());
    CHECK(*root == Poly(-2));

    // even-degree outer admits a sign flip; any exact solution counts
    const Poly v = parse_poly("x^2").compose(parse_poly("x^2+3*x"));
    const auto flip = solve_outer(parse_poly("x^2"), v);
    REQUIRE(flip.has_value());
    CHECK(parse_poly("x^2").compose(*flip) == v);
}

TEST_CASE("linear_power_root") {
    const auto l = linear_power_root(parse_poly("(2*x+3)^4"));
    REQUIRE(l.has_value());
    CHECK(l->deg() == 1);
    CHECK(l->pow(4) == parse_poly("(2*x+3)^4"));

    const auto lin = linear_power_root(parse_poly("5*x-1"));
    REQUIRE(lin.has_value());
    CHECK(*lin == parse_poly("5*x-1"));

    CHECK(!linear_power_root(parse_poly("x^2+1")).has_value());
    CHECK(!linear_power_root(Rational(2) * parse_poly("x^2")).has_value());  // lc not a square
}
