#include "powersum/poly.hpp"

#include <algorithm>

namespace powersum {

std::string to_string(Degree d) {
    return d.is_finite() ? std::to_string(d.value()) : std::string("-inf");
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    canonicalize();
}

Poly Poly::monomial(long long k, const Rational& c) {
    if (k < 0) throw std::domain_error("Poly::monomial: negative exponent");
    Poly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

void Poly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(long long k) const {
    static const Rational zero(0);
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
    return c_[static_cast<size_t>(k)];
}

Rational& Poly::mutable_coeff(long long k) {
    if (k < 0) throw std::domain_error("Poly: negative exponent");
    if (static_cast<size_t>(k) >= c_.size()) c_.resize(static_cast<size_t>(k) + 1, Rational(0));
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("Poly::lc: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    canonicalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    canonicalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    canonicalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Rational Poly::operator()(const Rational& x) const {
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::complex<double> Poly::operator()(const std::complex<double>& x) const {
    std::complex<double> r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + to_double(c_[i]);
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(i);
    r.canonicalize();
    return r;
}

Poly Poly::pow(unsigned long long e) const {
    Poly result(1);
    Poly sq(*this);
    for (unsigned long long m = e; m != 0; m >>= 1) {
        if (m & 1) result *= sq;
        if (m > 1) sq *= sq;
    }
    return result;
}

Poly Poly::compose(const Poly& g) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) {
        r *= g;
        r += Poly(c_[i]);
    }
    return r;
}

Poly Poly::monic() const {
    if (c_.empty()) throw std::domain_error("Poly::monic: zero polynomial");
    Poly r(*this);
    const Rational inv = Rational(1) / c_.back();
    for (auto& c : r.c_) c *= inv;
    return r;
}

std::pair<Poly, Poly> div_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("div_rem: division by zero polynomial");
    Poly rem = a;
    Poly quot;
    const long long db = b.deg();
    while (!rem.is_zero() && rem.deg() >= db) {
        const long long k = rem.deg() - db;
        const Rational c = rem.lc() / b.lc();
        quot.mutable_coeff(k) = c;
        rem -= Poly::monomial(k, c) * b;
    }
    quot.canonicalize();
    return {quot, rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = div_rem(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: division is not exact");
    return q;
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return div_rem(a, b).second.is_zero();
}

long long multiplicity(const Poly& p, const Poly& a) {
    if (a.is_zero()) throw std::domain_error("multiplicity: zero polynomial");
    if (p.is_constant()) throw std::domain_error("multiplicity: constant modulus");
    long long m = 0;
    Poly rest = a;
    while (true) {
        auto [q, r] = div_rem(rest, p);
        if (!r.is_zero()) return m;
        rest = q;
        ++m;
    }
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both arguments zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly u = primitive_scale(a).second;
    Poly v = primitive_scale(b).second;
    if (u.deg() < v.deg()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = div_rem(u, v).second;
        u = std::move(v);
        if (r.is_zero())
            v = Poly();
        else
            v = primitive_scale(r).second;
    }
    return u.monic();
}

std::pair<Rational, Poly> primitive_scale(const Poly& p) {
    if (p.is_zero()) return {Rational(0), Poly()};
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs())
        if (c != 0) den_lcm = boost::multiprecision::lcm(den_lcm, den(c));
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) num_gcd = boost::multiprecision::gcd(num_gcd, Integer(num(c) * (den_lcm / den(c))));
    Rational scale(num_gcd, den_lcm);
    if (p.lc() < 0) scale = -scale;
    Poly prim = p;
    prim *= Rational(1) / scale;
    return {scale, prim};
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (long long k = a.deg(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

}  // namespace powersum
