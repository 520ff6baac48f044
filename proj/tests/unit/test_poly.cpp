#include "powersum/poly.hpp"

#include <doctest.h>

using namespace powersum;

namespace {
Poly from(std::vector<Rational> c) { return Poly(std::move(c)); }
}  // namespace

TEST_CASE("degree semantics") {
    CHECK(Poly().degree() == Degree::neg_inf());
    CHECK(Poly().deg() == -1);
    CHECK(Poly(5).deg() == 0);
    CHECK(Poly::x().deg() == 1);
    CHECK(from({1, 0}).deg() == 0);  // trailing zeros stripped
    CHECK(Degree::neg_inf() + Degree(3) == Degree::neg_inf());
    CHECK(Degree::neg_inf() < Degree(-100));
    CHECK_THROWS(Degree::neg_inf().value());
    CHECK(Degree::neg_inf().value_or(-1) == -1);
}

TEST_CASE("arithmetic basics") {
    const Poly x = Poly::x();
    const Poly p = (x + Poly(1)) * (x + Poly(1));
    CHECK(p == from({1, 2, 1}));
    CHECK(p - p == Poly());
    CHECK((p * Poly()).is_zero());
    CHECK(-p == from({-1, -2, -1}));
    CHECK(p.derivative() == from({2, 2}));
    CHECK(x.pow(0) == Poly(1));
    CHECK(x.pow(5).deg() == 5);
    CHECK(p(Rational(2)) == 9);
}

TEST_CASE("compose") {
    const Poly x = Poly::x();
    const Poly f = x * x + Poly(1);
    const Poly g = x - Poly(1);
    CHECK(f.compose(g) == from({2, -2, 1}));
    CHECK(f.compose(Poly(3)) == Poly(10));
    CHECK(Poly(7).compose(f) == Poly(7));
}

TEST_CASE("division and gcd") {
    const Poly x = Poly::x();
    const Poly a = x.pow(3) + Poly(1);
    const Poly b = x + Poly(1);
    const auto [q, r] = div_rem(a, b);
    CHECK(q == from({1, -1, 1}));
    CHECK(r.is_zero());
    CHECK(exact_div(a, b) == q);
    CHECK_THROWS(exact_div(a, x + Poly(2)));
    CHECK(divides(b, a));
    CHECK(!divides(x, a));

    const Poly m1 = (x - Poly(2)) * (x - Poly(2)) * (x + Poly(1));
    const Poly m2 = (x - Poly(2)) * (x + Poly(3));
    CHECK(gcd(m1, m2) == x - Poly(2));
    CHECK(multiplicity(x - Poly(2), m1) == 2);
    CHECK(multiplicity(x + Poly(1), m1) == 1);
    CHECK(multiplicity(x + Poly(5), m1) == 0);
}

TEST_CASE("primitive_scale normalizes") {
    const Poly x = Poly::x();
    const Poly p = Rational(3, 2) * (x * x) + Rational(3) * x;
    const auto [s, prim] = primitive_scale(p);
    CHECK(s == Rational(3, 2));
    CHECK(prim == from({0, 2, 1}));
    CHECK(s * prim == p);

    const auto [s2, prim2] = primitive_scale(Rational(-1, 2) * x);
    CHECK(prim2.lc() > 0);
    CHECK(s2 * prim2 == Rational(-1, 2) * x);
}

TEST_CASE("poly_less total order") {
    const Poly x = Poly::x();
    CHECK(poly_less(Poly(3), x));
    CHECK(poly_less(x, x * x));
    CHECK(!poly_less(x, x));
    CHECK((poly_less(x, x + Poly(1)) || poly_less(x + Poly(1), x)));
}

TEST_CASE("complex evaluation") {
    const Poly p = Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    const auto v = p(std::complex<double>(2.0, 0.0));
    CHECK(std::abs(v - std::complex<double>(3.0, 0.0)) < 1e-12);
}
