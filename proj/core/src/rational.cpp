#include "powersum/rational.hpp"

#include <stdexcept>

namespace powersum {

std::optional<Integer> integer_root(const Integer& n, unsigned k) {
    if (k == 0) throw std::domain_error("integer_root: k must be >= 1");
    if (n < 0) return std::nullopt;
    if (n == 0 || n == 1 || k == 1) return n;
    Integer hi = 1;
    while (boost::multiprecision::pow(hi, k) <= n) hi <<= 1;
    Integer lo = hi >> 1;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (boost::multiprecision::pow(mid, k) <= n) lo = mid; else hi = mid - 1;
    }
    return boost::multiprecision::pow(lo, k) == n ? std::optional<Integer>(lo) : std::nullopt;
}

std::optional<Rational> rational_root(const Rational& r, unsigned k) {
    if (k == 0) throw std::domain_error("rational_root: k must be >= 1");
    if (r == 0) return Rational(0);
    const bool neg = r < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    auto rn = integer_root(neg ? Integer(-num(r)) : num(r), k);
    if (!rn) return std::nullopt;
    auto rd = integer_root(den(r), k);
    if (!rd) return std::nullopt;
    Rational root(*rn, *rd);
    return neg ? -root : root;
}

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rational pow_rational(const Rational& r, long long e) {
    if (e == 0) return 1;
    if (r == 0) {
        if (e < 0) throw std::domain_error("pow_rational: zero to a negative power");
        return 0;
    }
    const unsigned long long mag = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                                         : static_cast<unsigned long long>(e);
    Rational base = e < 0 ? Rational(den(r), num(r)) : r;
    Rational result = 1;
    Rational sq = base;
    for (unsigned long long m = mag; m != 0; m >>= 1) {
        if (m & 1) result *= sq;
        if (m > 1) sq *= sq;
    }
    return result;
}

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

}  // namespace powersum
