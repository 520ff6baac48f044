#ifndef POWERSUM_DECOMPOSE_HPP
#define POWERSUM_DECOMPOSE_HPP

#include "powersum/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powersum {

// Functional decomposition f = g(h) with deg h = r, normalized so that h is
// monic with h(0) = 0 (which makes the pair unique).  Returns nullopt when
// no such decomposition exists.  Preconditions: deg f >= 4 and r a proper
// divisor of deg f with 1 < r < deg f; violations throw.
std::optional<std::pair<Poly, Poly>> decompose_step(const Poly& f, long long r);

// Complete decomposition into indecomposables, outermost first; composing
// the chain left to right reproduces f.  deg f >= 1.
std::vector<Poly> full_decomposition(const Poly& f);

enum class ShapeKind { Cyclic, Dihedral, Neither };

std::string to_string(ShapeKind k);

// h = l1 ( core ( l2 ) ) with linear l1, l2 and core either x^n (cyclic) or
// the degree-n Chebyshev polynomial (dihedral).
struct ShapeTag {
    ShapeKind kind = ShapeKind::Neither;
    long long n = 0;
    std::optional<Poly> l1;
    std::optional<Poly> l2;
    std::string note;
};

// Exact classification; cyclic is tested first, so every quadratic is
// cyclic.  deg h >= 2 required.
ShapeTag classify_shape(const Poly& h);

// Q over the rationals with V = U(Q), if one exists.  U nonconstant.
std::optional<Poly> solve_outer(const Poly& U, const Poly& V);

// Linear l with l^(deg p) = p, exact including the leading coefficient.
std::optional<Poly> linear_power_root(const Poly& p);

}  // namespace powersum

#endif
