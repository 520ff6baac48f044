#include "powersum/cheb_dickson.hpp"

namespace powersum {

namespace {

void check_budget(long long index, const IdentityOptions& opts, const char* what) {
    if (index > opts.degree_budget)
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(index) +
                                    " exceeds degree budget " + std::to_string(opts.degree_budget));
}

}  // namespace

Poly chebyshev(long long n) {
    if (n < 0) throw std::domain_error("chebyshev: negative index");
    Poly prev(1);
    if (n == 0) return prev;
    Poly cur = Poly::x();
    const Poly two_x = Poly::monomial(1, 2);
    for (long long i = 1; i < n; ++i) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly dickson(long long n, const Rational& r) {
    if (n < 0) throw std::domain_error("dickson: negative index");
    Poly prev(2);
    if (n == 0) return prev;
    Poly cur = Poly::x();
    const Poly x = Poly::x();
    for (long long i = 1; i < n; ++i) {
        Poly next = x * cur - r * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly dickson_closed(long long n, const Rational& r) {
    if (n < 0) throw std::domain_error("dickson_closed: negative index");
    if (n == 0) return Poly(2);
    Poly out;
    for (long long j = 0; 2 * j <= n; ++j) {
        const Rational coeff =
            Rational(n, n - j) * Rational(binomial(n - j, j)) * pow_rational(-r, j);
        out += Poly::monomial(n - 2 * j, coeff);
    }
    return out;
}

bool verify_chebyshev_composition(long long m, long long n, const IdentityOptions& opts) {
    if (m < 0 || n < 0) throw std::domain_error("verify_chebyshev_composition: negative index");
    check_budget(m * n, opts, "verify_chebyshev_composition");
    return chebyshev(m * n) == chebyshev(m).compose(chebyshev(n));
}

bool verify_dickson_composition(long long k, long long l, const Rational& r,
                                const IdentityOptions& opts) {
    if (k < 0 || l < 0) throw std::domain_error("verify_dickson_composition: negative index");
    check_budget(k * l, opts, "verify_dickson_composition");
    return dickson(k * l, r) == dickson(k, pow_rational(r, l)).compose(dickson(l, r));
}

bool verify_chebyshev_product(long long n, long long m, long long k, const IdentityOptions& opts) {
    if (m < 0 || k < 0 || n < m) throw std::domain_error("verify_chebyshev_product: need n >= m >= 0, k >= 0");
    check_budget((n + m) * k, opts, "verify_chebyshev_product");
    const Poly sum = chebyshev((n + m) * k) + chebyshev((n - m) * k);
    const bool half_form = chebyshev(n * k) * chebyshev(m * k) == sum * Rational(1, 2);
    const bool composed_form =
        sum == Rational(2) * (chebyshev(n) * chebyshev(m)).compose(chebyshev(k));
    return half_form && composed_form;
}

bool dickson_functional_identity_check(long long n, const Rational& r,
                                       const IdentityOptions& opts) {
    if (n < 0) throw std::domain_error("dickson_functional_identity_check: negative index");
    check_budget(n, opts, "dickson_functional_identity_check");
    const RatFunc y(Poly::x());
    const RatFunc arg = y + RatFunc(Poly(r), Poly::x());  // y + r/y
    const RatFunc lhs = compose(dickson(n, r), arg);
    const RatFunc rhs = y.pow(n) + RatFunc(Poly(r), Poly::x()).pow(n);
    return lhs == rhs;
}

bool verify_chebyshev_dickson_bridge(long long n, const IdentityOptions& opts) {
    if (n < 0) throw std::domain_error("verify_chebyshev_dickson_bridge: negative index");
    check_budget(n, opts, "verify_chebyshev_dickson_bridge");
    const Poly half_x = Poly::monomial(1, Rational(1, 2));
    return Rational(2) * chebyshev(n).compose(half_x) == dickson(n, 1);
}

}  // namespace powersum
