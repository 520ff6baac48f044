#ifndef POWERSUM_POLY_HPP
#define POWERSUM_POLY_HPP

#include "powersum/rational.hpp"

#include <compare>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powersum {

// Degree of a polynomial, with the degree of the zero polynomial represented
// as negative infinity.  neg_inf absorbs addition and compares below every
// finite value.
class Degree {
public:
    constexpr Degree(long long v) : finite_(true), v_(v) {}

    static constexpr Degree neg_inf() { return Degree(false, 0); }

    constexpr bool is_finite() const { return finite_; }

    constexpr long long value() const {
        if (!finite_) throw std::logic_error("Degree: value() on neg_inf");
        return v_;
    }

    // Finite value, or `fallback` for neg_inf.
    constexpr long long value_or(long long fallback) const { return finite_ ? v_ : fallback; }

    constexpr Degree operator+(Degree o) const {
        if (!finite_ || !o.finite_) return neg_inf();
        return Degree(v_ + o.v_);
    }
    constexpr Degree operator+(long long n) const { return finite_ ? Degree(v_ + n) : neg_inf(); }

    constexpr bool operator==(const Degree& o) const {
        return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
    }
    constexpr std::strong_ordering operator<=>(const Degree& o) const {
        if (finite_ != o.finite_)
            return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!finite_) return std::strong_ordering::equal;
        return v_ <=> o.v_;
    }

private:
    constexpr Degree(bool finite, long long v) : finite_(finite), v_(v) {}

    bool finite_;
    long long v_;
};

std::string to_string(Degree d);

// Univariate polynomial over the rationals.  Coefficients are stored densely
// in ascending order of exponent and kept canonical: the zero polynomial has
// an empty coefficient vector, any other polynomial has a nonzero last entry.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return monomial(1, 1); }
    static Poly monomial(long long k, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long long>(c_.size()) - 1); }
    // Degree as a plain integer, with -1 for the zero polynomial.
    long long deg() const { return static_cast<long long>(c_.size()) - 1; }

    // Coefficient of x^k; zero beyond the stored range.
    const Rational& coeff(long long k) const;
    Rational& mutable_coeff(long long k);
    void canonicalize();

    const Rational& lc() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rational operator()(const Rational& x) const;
    std::complex<double> operator()(const std::complex<double>& x) const;

    Poly derivative() const;
    Poly pow(unsigned long long e) const;
    // Composition f(g).
    Poly compose(const Poly& g) const;

    Poly monic() const;

private:
    std::vector<Rational> c_;
};

// Quotient and remainder with deg rem < deg divisor; divisor must be nonzero.
std::pair<Poly, Poly> div_rem(const Poly& a, const Poly& b);

// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& b, const Poly& a);

// Largest e with p^e dividing a; a nonzero, p nonconstant.
long long multiplicity(const Poly& p, const Poly& a);

// Monic gcd; both arguments zero is an error.
Poly gcd(const Poly& a, const Poly& b);

// Writes p as s * P with P an integer-coefficient polynomial whose
// coefficients are coprime and whose leading coefficient is positive.
std::pair<Rational, Poly> primitive_scale(const Poly& p);

// Total ordering for canonical containers: by degree, then coefficients from
// the leading one down.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace powersum

#endif
