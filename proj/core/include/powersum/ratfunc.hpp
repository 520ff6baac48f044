#ifndef POWERSUM_RATFUNC_HPP
#define POWERSUM_RATFUNC_HPP

#include "powersum/poly.hpp"

#include <optional>

namespace powersum {

// Rational function over the rationals, kept canonical: numerator and
// denominator coprime, denominator monic.  Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc pow(long long e) const;

    // Exact evaluation; nullopt at a pole.
    std::optional<Rational> operator()(const Rational& x) const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

// f(g) for a polynomial f and rational function g.
RatFunc compose(const Poly& f, const RatFunc& g);

}  // namespace powersum

#endif
