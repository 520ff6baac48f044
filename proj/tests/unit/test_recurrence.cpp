#include "powersum/recurrence.hpp"

#include "powersum/polyio.hpp"

#include <doctest.h>

#include <cmath>

using namespace powersum;

namespace {

RecurrenceSpec cubic_spec(const char* a, const char* b, const char* c, const char* w0,
                          const char* w1, const char* w2) {
    RecurrenceSpec spec;
    spec.order = 3;
    spec.coeffs = {parse_poly(a), parse_poly(b), parse_poly(c)};
    spec.initial = {parse_poly(w0), parse_poly(w1), parse_poly(w2)};
    return spec;
}

}  // namespace

TEST_CASE("generate_terms runs the recurrence") {
    RecurrenceSpec fib;
    fib.order = 2;
    fib.coeffs = {Poly::x(), Poly(1)};
    fib.initial = {Poly(0), Poly(1)};
    const auto terms = generate_terms(fib, 4);
    REQUIRE(terms.size() == 5);
    CHECK(terms[2] == Poly::x());
    CHECK(terms[3] == parse_poly("x^2+1"));
    CHECK(terms[4] == parse_poly("x^3+2*x"));
    CHECK(generate_terms(fib, 0).size() == 1);
}

TEST_CASE("power sum expansion and induced recurrence") {
    const std::vector<PowerSumTerm> ps = {{Poly(1), Poly::x()}, {Poly(1), Poly(2)}};
    CHECK(expand_power_sum(ps, 0) == Poly(2));
    CHECK(expand_power_sum(ps, 3) == parse_poly("x^3+8"));

    const auto induced = induced_recurrence(ps);
    CHECK(induced.order == 2);
    CHECK(induced.coeffs[0] == parse_poly("x+2"));
    CHECK(induced.coeffs[1] == parse_poly("-2*x"));
    CHECK(induced.initial[0] == Poly(2));
    CHECK(induced.initial[1] == parse_poly("x+2"));
    const auto rep = check_power_sum_consistency(induced, 8);
    CHECK(rep.ok);

    CHECK_THROWS(expand_power_sum({{Poly(1), Poly::x()}, {Poly(2), Poly::x()}}, 1));
    CHECK_THROWS(expand_power_sum({{Poly(1), Poly(0)}}, 1));

    RecurrenceSpec broken = induced;
    broken.initial[1] = Poly(99);
    const auto bad = check_power_sum_consistency(broken, 8);
    CHECK(!bad.ok);
    CHECK(bad.first_mismatch == 1);
}

TEST_CASE("structure checker flags") {
    // remark-tuned single dominant term plus a constant root
    const Poly alpha = parse_poly("1 + x + 2*x^2");
    // b2 = 1, c0 = 1, c1 = 1, c2 = 2: b1 = -3/2, b0 = 3*(2-2)/4 = 0
    const Poly a1 = parse_poly("x^2 - 3/2*x");
    const std::vector<PowerSumTerm> good = {{a1, alpha}, {Poly(1), Poly(1)}};
    const auto rep = check_desired_structure(good, 3);
    CHECK(rep.dominant_root_ok);
    CHECK(rep.coeff_degree_ok);
    CHECK(rep.excluded_binary_form_ok);
    CHECK(rep.eta_vanishing_ok);
    CHECK(rep.all_ok);
    CHECK(rep.ell == 8);
    CHECK(rep.eta_top != 0);

    const std::vector<PowerSumTerm> untuned = {{parse_poly("x^2+1"), alpha}, {Poly(1), Poly(1)}};
    CHECK(!check_desired_structure(untuned, 3).eta_vanishing_ok);

    // excluded binary shape: constant coefficients, dominant root a linear power
    const std::vector<PowerSumTerm> excluded = {{Poly(2), parse_poly("(x+1)^2")}, {Poly(1), Poly(3)}};
    const auto exc = check_desired_structure(excluded, 3);
    CHECK(!exc.excluded_binary_form_ok);

    const std::vector<PowerSumTerm> not_applicable = {{Poly(2), parse_poly("(x+1)^2")},
                                                      {Poly(1), Poly::x()}};
    CHECK(check_desired_structure(not_applicable, 3).excluded_binary_form_ok);

    const std::vector<PowerSumTerm> tie = {{Poly(1), parse_poly("x^2")}, {Poly(1), parse_poly("x^2+1")}};
    CHECK(!check_desired_structure(tie, 3).dominant_root_ok);

    CHECK_THROWS(check_desired_structure(good, 2));   // n >= 3
    CHECK_THROWS(check_desired_structure({{Poly(1), Poly::x()}}, 3));
}

TEST_CASE("cubic symbolic data") {
    const auto csd = cubic_symbolic_data(cubic_spec("x^2", "1", "x", "1", "1", "1"));
    CHECK(csd.p == Rational(1, 3) * parse_poly("x^4") + Poly(1));
    CHECK(csd.q.deg() == 6);
    CHECK(csd.disc.deg() == 7);
    CHECK(csd.deg_q_matches);
    CHECK(csd.deg_disc_matches);

    // expanded discriminant identity
    const Poly a = csd.a, b = csd.b, c = csd.c;
    const Poly expanded = Rational(1, 27) * (a * a * a * c) - Rational(1, 108) * (a * a * b * b) +
                          Rational(1, 6) * (a * b * c) + Rational(1, 4) * (c * c) -
                          Rational(1, 27) * (b * b * b);
    CHECK(csd.disc == expanded);

    CHECK_THROWS(cubic_symbolic_data(RecurrenceSpec{}));
}

TEST_CASE("bracket polynomial: symmetric-function form vs printed form") {
    const auto spec = cubic_spec("x", "1", "1", "1", "1", "1");
    const auto [bracket, printed] = w_bracket_polys(spec);
    CHECK(bracket == parse_poly("x^2 + 2*x + 1"));
    CHECK(printed == parse_poly("x^2 + 6*x + 9"));
    CHECK(bracket != printed);

    const auto pts = default_sample_points(8, 7);
    const auto wf = build_w_formulas(spec, pts, 1e-8);
    CHECK(wf.identity_ok);
    CHECK(!wf.printed_matches);
    CHECK(!wf.notes.empty());
}

TEST_CASE("cardano verification on sample points") {
    const auto spec = cubic_spec("x^2", "1", "x", "1", "x", "x^2");
    const auto pts = default_sample_points(10, 42);
    const auto rep = cardano_verify(spec, pts, 1e-8);
    CHECK(rep.used >= 5);
    CHECK(rep.ok);
    for (const auto& s : rep.samples) {
        if (s.degenerate) continue;
        CHECK(s.char_residual <= 1e-8);
        CHECK(s.vieta_e1_residual <= 1e-8);
        CHECK(s.vieta_e2_residual <= 1e-8);
        CHECK(s.vieta_e3_residual <= 1e-8);  // product of roots equals +c(x0)
        CHECK(s.delta_identity_residual <= 1e-8);
    }
}

TEST_CASE("binet closed forms match terms") {
    const auto spec3 = cubic_spec("x", "1", "1", "0", "1", "x");
    const auto pts = default_sample_points(10, 11);
    const auto rep3 = binet_verify(spec3, pts, 10, 1e-8);
    CHECK(rep3.ok);
    CHECK(rep3.used >= 5);

    RecurrenceSpec spec2;
    spec2.order = 2;
    spec2.coeffs = {Poly::x(), Poly(1)};
    spec2.initial = {Poly(0), Poly(1)};
    const auto rep2 = binet_verify(spec2, pts, 12, 1e-8);
    CHECK(rep2.ok);

    RecurrenceSpec bad;
    bad.order = 1;
    bad.coeffs = {Poly(1)};
    bad.initial = {Poly(1)};
    CHECK_THROWS(binet_verify(bad, pts, 5, 1e-8));
}

TEST_CASE("sample points are deterministic and in range") {
    const auto a = default_sample_points(16, 5);
    const auto b = default_sample_points(16, 5);
    const auto c = default_sample_points(16, 6);
    CHECK(a == b);
    CHECK(a != c);
    for (const auto& z : a) {
        CHECK(z.imag() == 0.0);
        CHECK(std::abs(z.real()) <= 4.0);
    }
}
