#ifndef POWERSUM_RATIONAL_HPP
#define POWERSUM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace powersum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// Exact k-th root of a non-negative integer, if one exists.  k >= 1.
std::optional<Integer> integer_root(const Integer& n, unsigned k);

// Exact k-th root of a rational.  For even k the argument must be >= 0 and the
// non-negative root is returned; for odd k the sign follows the argument.
std::optional<Rational> rational_root(const Rational& r, unsigned k);

inline bool is_rational_square(const Rational& r) { return rational_root(r, 2).has_value(); }

// Binomial coefficient, exact.  Returns 0 for k < 0 or k > n.
Integer binomial(long long n, long long k);

// r^e for signed e; throws std::domain_error on 0^negative.
Rational pow_rational(const Rational& r, long long e);

std::string to_string(const Rational& r);

}  // namespace powersum

#endif
