#include "powersum/ratfunc.hpp"

namespace powersum {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational inv = Rational(1) / den_.lc();
    num_ *= inv;
    den_ *= inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFunc RatFunc::pow(long long e) const {
    if (e == 0) return RatFunc(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("RatFunc: zero to a negative power");
        return RatFunc();
    }
    const bool invert = e < 0;
    unsigned long long mag = invert ? static_cast<unsigned long long>(-(e + 1)) + 1
                                    : static_cast<unsigned long long>(e);
    RatFunc base = invert ? RatFunc(den_, num_) : *this;
    RatFunc result(1);
    RatFunc sq = base;
    for (unsigned long long m = mag; m != 0; m >>= 1) {
        if (m & 1) result *= sq;
        if (m > 1) sq *= sq;
    }
    return result;
}

std::optional<Rational> RatFunc::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) return std::nullopt;
    return num_(x) / d;
}

RatFunc compose(const Poly& f, const RatFunc& g) {
    RatFunc r;
    for (long long i = f.deg(); i >= 0; --i) {
        r *= g;
        r += RatFunc(f.coeff(i));
    }
    return r;
}

}  // namespace powersum
