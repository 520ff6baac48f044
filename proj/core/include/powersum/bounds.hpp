#ifndef POWERSUM_BOUNDS_HPP
#define POWERSUM_BOUNDS_HPP

#include "powersum/rational.hpp"
#include "powersum/spec_file.hpp"

#include <array>
#include <string>
#include <vector>

namespace powersum {

// C(n,2) * (s_size + max(0, 2 genus - 2)); n >= 1, s_size, genus >= 0.
Integer brownawell_masser_bound(long long n, long long s_size, long long genus);

// k1 g1 + k2 g2 + (k1 - 1)(k2 - 1); k1, k2 >= 1, g1, g2 >= 0.
Integer castelnuovo_bound(long long k1, long long g1, long long k2, long long g2);

// (d1 - 1)(d2 - 1); d1, d2 >= 1.
Integer riemann_bound(long long d1, long long d2);

struct NLemmaFacts {
    long long d_max = 0;                  // deg_h - 1
    long long genus_max = 0;              // (d_max - 1)(d_max - 2) / 2
    long long d_min_for_lower_bound = 0;  // ceil(deg_h / 2)
};

// The three degree facts consumed by the genus chain; deg_h >= 2.
NLemmaFacts nlemma_degree_facts(long long deg_h);

// Full constant chain for the order-3 degree bound.  Degrees use -1 for the
// zero polynomial (only deg_b may be -1; a, c, q, disc and the bracket must
// be nonzero).  Every intermediate is kept so each inequality line can be
// replayed numerically.
struct BoundReportT2 {
    long long deg_a = 0;
    long long deg_b = 0;
    long long deg_c = 0;
    std::array<long long, 3> deg_w = {0, 0, 0};  // clamped at 0 for zero W_i
    long long deg_q = 0;
    long long deg_disc = 0;
    long long deg_bracket = 0;

    Rational c1, c2, c3, c4, c5, c6_bm, c6_root, c7, c8, c9, c10, c11, c12;
    Rational genus_bound_coeff;   // 3 c2, coefficient of deg h^2
    Rational s_bound_coeff;       // c5, coefficient of deg h
    Rational p1_height_coeff;     // c6_bm, coefficient of deg h^2
    Rational final_degree_bound;  // 2 c12

    bool hyp_disc_degree = false;   // 3 deg a > deg c
    bool hyp_q_degree = false;      // 2 deg a > deg b
    bool hyp_product_degree = false;  // deg a + deg c > 2 deg b
    bool hypotheses_ok = false;

    bool valid = false;
    std::string invalid_reason;
    std::vector<std::string> caveats;
};

// Order-3 spec; throws std::invalid_argument when a, c, q, disc or the
// bracket polynomial vanishes.  Hypothesis violations and a nonpositive c11
// yield an invalid report, not an exception.
BoundReportT2 theorem2_bound(const RecurrenceSpec& spec);

struct BoundReportT3 {
    long long deg_a1 = 0;
    long long deg_a0 = 0;
    long long deg_u0 = 0;
    long long deg_u1 = 0;
    long long c13 = 0;
    long long c14 = 0;
    Integer c = 0;
    bool degenerate = false;  // c == 0, all degrees zero
    std::vector<std::string> notes;
};

// Order-2 spec; all four polynomials must be nonzero.
BoundReportT3 theorem3_bound(const RecurrenceSpec& spec);

}  // namespace powersum

#endif
