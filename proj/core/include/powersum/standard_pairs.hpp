#ifndef POWERSUM_STANDARD_PAIRS_HPP
#define POWERSUM_STANDARD_PAIRS_HPP

#include "powersum/poly.hpp"
#include "powersum/spec_file.hpp"

#include <array>
#include <string>
#include <vector>

namespace powersum {

enum class PairKind { First, Second, Third, Fourth, Fifth, Specific };

std::string to_string(PairKind kind);
PairKind pair_kind_from_string(const std::string& s);

// Parameter record shared by all kinds; unused fields are ignored.
//   first:    m, n, a, p        (x^m, a x^n p(x)^m), 0 <= n < m, gcd(n,m) = 1,
//                               n + deg p > 0, a != 0, p != 0
//   second:   a, b, p           (x^2, (a x^2 + b) p(x)^2), a != 0, p != 0
//   third:    m, n, a           (D_m(x, a^n), D_n(x, a^m)), gcd(m,n) = 1, a != 0
//   fourth:   m, n, a, b        ((1/a)^{m/2} D_m(x,a), -(1/b)^{n/2} D_n(x,b)),
//                               gcd(m,n) = 2, a != 0, b != 0
//   fifth:    a                 ((a x^2 - 1)^3, 3x^4 - 4x^3), a != 0
//   specific: m, n, r           (D_m(x, r^{n/d}), -D_n(x/2, r^{m/d})) with
//                               d = gcd(m,n) = 3; other d >= 3 rejected since
//                               the needed cosine is irrational
struct PairParams {
    long long m = 0;
    long long n = 0;
    Rational a = 0;
    Rational b = 0;
    Rational r = 0;
    Poly p;
};

struct StandardPair {
    PairKind kind = PairKind::First;
    PairParams params;
    Poly left;
    Poly right;
};

// Throws std::invalid_argument naming the violated table restriction.
StandardPair make_standard_pair(PairKind kind, const PairParams& params);

// Exact check of f = phi . pair.left . lam and g = phi . pair.right . mu.
// lam and mu must be linear.
bool verify_bilu_tichy_shape(const Poly& f, const Poly& g, const Poly& phi,
                             const StandardPair& pair, const Poly& lam, const Poly& mu);

// One grid evaluation of the two critical coefficient slots of
// a D_p(cx + d, r) + b.
struct ExclusionGridPoint {
    Rational a, c, d, r;
    Rational coeff_top;     // x^{p-1} slot: a p c^{p-1} d
    Rational coeff_second;  // x^{p-2} slot: a c^{p-2} (C(p,2) d^2 - p r)
    bool admissible = false;  // a, c, r all nonzero
    bool excluded = false;    // admissible and at least one slot nonzero
};

struct ExclusionReport {
    long long p = 0;
    long long ell = 0;  // deg a_1 + n deg alpha_1 of the supplied power sum
    std::vector<ExclusionGridPoint> grid;
    bool all_excluded = false;  // every admissible point excluded
    std::vector<std::string> notes;
};

// Reproduces the third-kind exclusion computation: no a D_p(cx+d, r) + b with
// a, c, r nonzero has both coefficient slots x^{p-1} and x^{p-2} vanishing.
// The power sum must pass the structure checker's vanishing assumption (iv)
// at index n; p must be a prime >= 3.  Each grid tuple is (a, c, d, r); the
// closed-form slots are cross-checked against an exact Dickson expansion.
ExclusionReport exclusion_check_third_kind(const std::vector<PowerSumTerm>& u, long long n,
                                           long long p,
                                           const std::vector<std::array<Rational, 4>>& grid);

}  // namespace powersum

#endif
