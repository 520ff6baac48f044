#ifndef POWERSUM_POLYIO_HPP
#define POWERSUM_POLYIO_HPP

#include "powersum/poly.hpp"
#include "powersum/ratfunc.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powersum {

// Raised on malformed input; `offset` is the byte position of the offending
// token in the original string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset);
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Grammar (whitespace insensitive between tokens):
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" nat)?
//   base     := rational | "x" | "(" expr ")" | "-" factor
//   rational := int ("/" posint)?
// A "/" belongs to a rational literal only when it directly follows the
// integer part and is directly followed by a digit; implicit multiplication
// is rejected.
Poly parse_poly(std::string_view text);

// expr ("/" expr)? with the same lexical rules; "1/2/3" is the literal 1/2
// divided by 3.
RatFunc parse_ratfunc(std::string_view text);

// Canonical form: descending powers, explicit "*", rationals as p/q, unit
// coefficients omitted before a power of x, zero prints as "0".
std::string print_poly(const Poly& p);

// Numerator alone when the denominator is 1, otherwise "(num) / (den)".
std::string print_ratfunc(const RatFunc& f);

}  // namespace powersum

#endif
