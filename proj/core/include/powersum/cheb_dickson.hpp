#ifndef POWERSUM_CHEB_DICKSON_HPP
#define POWERSUM_CHEB_DICKSON_HPP

#include "powersum/poly.hpp"
#include "powersum/ratfunc.hpp"

namespace powersum {

// T_0 = 1, T_1 = x, T_{n+2} = 2x T_{n+1} - T_n.
Poly chebyshev(long long n);

// D_0 = 2, D_1 = x, D_{n+2} = x D_{n+1} - r D_n.
Poly dickson(long long n, const Rational& r);

// Binomial closed form; independently computed cross-check for dickson().
Poly dickson_closed(long long n, const Rational& r);

// Each verifier computes both sides exactly and compares; the largest index
// involved must stay within the degree budget or std::invalid_argument is
// thrown.
struct IdentityOptions {
    long long degree_budget = 64;
};

// T_{mn} = T_m(T_n)
bool verify_chebyshev_composition(long long m, long long n, const IdentityOptions& opts = {});

// D_{kl}(x, r) = D_k(D_l(x, r), r^l)
bool verify_dickson_composition(long long k, long long l, const Rational& r,
                                const IdentityOptions& opts = {});

// For n >= m:  T_{nk} T_{mk} = (T_{(n+m)k} + T_{(n-m)k}) / 2   and
//              T_{(n+m)k} + T_{(n-m)k} = 2 (T_n T_m)(T_k).
bool verify_chebyshev_product(long long n, long long m, long long k,
                              const IdentityOptions& opts = {});

// D_n(y + r/y, r) = y^n + (r/y)^n as exact rational functions.
bool dickson_functional_identity_check(long long n, const Rational& r,
                                       const IdentityOptions& opts = {});

// 2 T_n(x/2) = D_n(x, 1)
bool verify_chebyshev_dickson_bridge(long long n, const IdentityOptions& opts = {});

}  // namespace powersum

#endif
