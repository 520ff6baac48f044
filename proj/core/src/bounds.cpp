#include "powersum/bounds.hpp"

#include "powersum/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace powersum {

Integer brownawell_masser_bound(long long n, long long s_size, long long genus) {
    if (n < 1 || s_size < 0 || genus < 0)
        throw std::invalid_argument("brownawell_masser_bound: need n >= 1, s_size >= 0, genus >= 0");
    return binomial(n, 2) * Integer(s_size + std::max<long long>(0, 2 * genus - 2));
}

Integer castelnuovo_bound(long long k1, long long g1, long long k2, long long g2) {
    if (k1 < 1 || k2 < 1 || g1 < 0 || g2 < 0)
        throw std::invalid_argument("castelnuovo_bound: need k1, k2 >= 1 and g1, g2 >= 0");
    return Integer(k1) * g1 + Integer(k2) * g2 + Integer(k1 - 1) * (k2 - 1);
}

Integer riemann_bound(long long d1, long long d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("riemann_bound: need d1, d2 >= 1");
    return Integer(d1 - 1) * (d2 - 1);
}

NLemmaFacts nlemma_degree_facts(long long deg_h) {
    if (deg_h < 2) throw std::invalid_argument("nlemma_degree_facts: need deg_h >= 2");
    NLemmaFacts facts;
    facts.d_max = deg_h - 1;
    facts.genus_max = (facts.d_max - 1) * (facts.d_max - 2) / 2;
    facts.d_min_for_lower_bound = (deg_h + 1) / 2;
    return facts;
}

BoundReportT2 theorem2_bound(const RecurrenceSpec& spec) {
    if (spec.order != 3) throw std::invalid_argument("theorem2_bound: order must be 3");
    const CubicSymbolicData csd = cubic_symbolic_data(spec);
    if (csd.a.is_zero() || csd.c.is_zero())
        throw std::invalid_argument("theorem2_bound: coefficients a and c must be nonzero");
    if (csd.q.is_zero()) throw std::invalid_argument("theorem2_bound: q vanishes identically");
    if (csd.disc.is_zero())
        throw std::invalid_argument("theorem2_bound: the discriminant quantity vanishes identically");
    const Poly bracket = w_bracket_polys(spec).first;
    if (bracket.is_zero())
        throw std::invalid_argument("theorem2_bound: the bracket polynomial vanishes identically");

    BoundReportT2 rep;
    rep.deg_a = csd.a.deg();
    rep.deg_b = csd.b.deg();  // -1 when b == 0
    rep.deg_c = csd.c.deg();
    rep.deg_q = csd.q.deg();
    rep.deg_disc = csd.disc.deg();
    rep.deg_bracket = bracket.deg();

    long long sum_w = 0;
    for (int i = 0; i < 3; ++i) {
        const long long d = spec.initial[static_cast<size_t>(i)].deg();
        rep.deg_w[static_cast<size_t>(i)] = std::max<long long>(d, 0);
        sum_w += rep.deg_w[static_cast<size_t>(i)];
        if (d < 0)
            rep.caveats.push_back("initial term W" + std::to_string(i) +
                                  " is zero; it contributes degree 0 to the height sums");
    }

    rep.hyp_disc_degree = 3 * rep.deg_a > rep.deg_c;
    rep.hyp_q_degree = 2 * rep.deg_a > rep.deg_b;
    rep.hyp_product_degree = rep.deg_a + rep.deg_c > 2 * rep.deg_b;
    rep.hypotheses_ok = rep.hyp_disc_degree && rep.hyp_q_degree && rep.hyp_product_degree;

    if (!csd.deg_q_matches)
        rep.caveats.push_back("deg q departs from 3 deg a; actual degree used in the chain");
    if (!csd.deg_disc_matches)
        rep.caveats.push_back("deg disc departs from 3 deg a + deg c; actual degree used in the chain");

    const Rational half_disc = Rational(rep.deg_disc, 2);
    rep.c1 = rep.deg_disc;
    rep.c2 = Rational(2) * 19683 * (rep.c1 + 1) + 3;  // 3^9 = 19683
    rep.c3 = Rational(rep.deg_bracket) + half_disc;
    rep.c4 = rep.c3 + half_disc;
    rep.c5 = Rational(18) * rep.deg_c + 18 * rep.c4 + 9;
    rep.c6_bm = Rational(10) * (6 * rep.c2 + rep.c5);
    rep.c6_root = Rational(2, 3) * (Rational(rep.deg_q) + half_disc) + rep.deg_a;
    rep.c7 = Rational(4) * (Rational(rep.deg_q) + half_disc) + rep.deg_a;
    rep.c8 = 12 * rep.c7 + sum_w + half_disc;
    rep.c9 = 3 * rep.c6_root + 3 * rep.c7 + sum_w + half_disc;
    rep.c10 = 3 * rep.c6_root + 9 * rep.c7 + Rational(2) * sum_w;
    rep.c11 = Rational(2, 3) * rep.deg_q - Rational(1, 3) * rep.deg_disc + Rational(2) * rep.deg_a;

    rep.genus_bound_coeff = Rational(3) * rep.c2;
    rep.s_bound_coeff = rep.c5;
    rep.p1_height_coeff = rep.c6_bm;

    rep.caveats.push_back(
        "the chain names one constant twice; the two quantities are tracked separately as "
        "c6_bm and c6_root");
    rep.caveats.push_back(
        "the q1 height lower bound is reused from a companion quotient of the same weight "
        "numerators");
    rep.caveats.push_back(
        "two auxiliary valuation hypotheses behind the height chain are assumed, not verified");

    if (rep.c11 <= 0) {
        rep.valid = false;
        rep.invalid_reason = "lower bound for H(q1) degenerates (c11 <= 0)";
        return rep;
    }
    rep.c12 = (rep.c6_bm + 18 * rep.c10) * (9 * rep.c8 + 18 * rep.c9 + 9 * rep.c6_root + 18 * rep.c7) /
              (9 * rep.c11);
    rep.final_degree_bound = 2 * rep.c12;

    if (!rep.hypotheses_ok) {
        rep.valid = false;
        rep.invalid_reason = "degree hypotheses violated";
        return rep;
    }
    rep.valid = true;
    return rep;
}

BoundReportT3 theorem3_bound(const RecurrenceSpec& spec) {
    if (spec.order != 2) throw std::invalid_argument("theorem3_bound: order must be 2");
    const Poly& a1 = spec.coeffs[0];
    const Poly& a0 = spec.coeffs[1];
    const Poly& u0 = spec.initial[0];
    const Poly& u1 = spec.initial[1];
    if (a1.is_zero() || a0.is_zero() || u0.is_zero() || u1.is_zero())
        throw std::invalid_argument("theorem3_bound: zero polynomial among inputs");

    BoundReportT3 rep;
    rep.deg_a1 = a1.deg();
    rep.deg_a0 = a0.deg();
    rep.deg_u0 = u0.deg();
    rep.deg_u1 = u1.deg();
    rep.c13 = std::max(rep.deg_a0, 2 * rep.deg_a1);
    rep.c14 = std::max({2 * rep.deg_u1, rep.deg_u0 + rep.deg_u1 + rep.deg_a1,
                        2 * rep.deg_u0 + rep.deg_a0});
    rep.c = Integer(32) *
            (2 * (rep.deg_a0 + rep.deg_u0 + rep.deg_u1) + 7 * rep.c13 + 2 * rep.c14 + 1) *
            (rep.deg_u0 + rep.deg_u1 + 6 * rep.c13);
    rep.degenerate = rep.c == 0;
    if (rep.degenerate)
        rep.notes.push_back("all input degrees are zero; the bound degenerates to 0");
    return rep;
}

}  // namespace powersum
