#include "powersum/polyio.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace powersum {

ParseError::ParseError(const std::string& what, size_t offset)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

enum class Tok { Num, X, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    Rational value;
    size_t offset;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = s.size();
    auto digits = [&](size_t& j) {
        size_t start = j;
        while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return std::string(s.substr(start, j - start));
    };
    while (i < n) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer numer(digits(i));
            Integer denom = 1;
            // A '/' glues a rational literal only when directly adjacent on
            // both sides: "1/2" is a literal, "1 / 2" and "1/x" are not.
            if (i + 1 < n && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                const size_t den_at = i;
                denom = Integer(digits(i));
                if (denom == 0) throw ParseError("zero denominator in rational literal", den_at);
            }
            out.push_back({Tok::Num, Rational(numer, denom), at});
            continue;
        }
        ++i;
        switch (c) {
            case 'x': out.push_back({Tok::X, 0, at}); break;
            case '+': out.push_back({Tok::Plus, 0, at}); break;
            case '-': out.push_back({Tok::Minus, 0, at}); break;
            case '*': out.push_back({Tok::Star, 0, at}); break;
            case '^': out.push_back({Tok::Caret, 0, at}); break;
            case '/': out.push_back({Tok::Slash, 0, at}); break;
            case '(': out.push_back({Tok::LParen, 0, at}); break;
            case ')': out.push_back({Tok::RParen, 0, at}); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }
    out.push_back({Tok::End, 0, n});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view s) : toks_(lex(s)) {}

    Poly expr() {
        Poly p = term();
        while (peek() == Tok::Plus || peek() == Tok::Minus) {
            const bool minus = peek() == Tok::Minus;
            ++pos_;
            if (minus)
                p -= term();
            else
                p += term();
        }
        return p;
    }

    void expect_end() const {
        if (peek() != Tok::End) throw ParseError("unexpected token", cur().offset);
    }

    std::optional<size_t> eat_slash() {
        if (peek() != Tok::Slash) return std::nullopt;
        const size_t at = cur().offset;
        ++pos_;
        return at;
    }

private:
    Poly term() {
        Poly p = factor();
        while (peek() == Tok::Star) {
            ++pos_;
            p *= factor();
        }
        return p;
    }

    Poly factor() {
        Poly p = base();
        if (peek() == Tok::Caret) {
            ++pos_;
            if (peek() != Tok::Num) throw ParseError("expected exponent", cur().offset);
            const Rational e = cur().value;
            if (!is_integer(e)) throw ParseError("exponent must be a natural number", cur().offset);
            if (e > 100000) throw ParseError("exponent too large", cur().offset);
            ++pos_;
            p = p.pow(num(e).convert_to<unsigned long long>());
        }
        return p;
    }

    Poly base() {
        switch (peek()) {
            case Tok::Num: {
                Poly p(cur().value);
                ++pos_;
                return p;
            }
            case Tok::X:
                ++pos_;
                return Poly::x();
            case Tok::LParen: {
                ++pos_;
                Poly p = expr();
                if (peek() != Tok::RParen) throw ParseError("expected ')'", cur().offset);
                ++pos_;
                return p;
            }
            case Tok::Minus:
                ++pos_;
                return -factor();
            default:
                throw ParseError("expected a number, 'x', '(' or '-'", cur().offset);
        }
    }

    const Token& cur() const { return toks_[pos_]; }
    Tok peek() const { return toks_[pos_].kind; }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
    Parser p(text);
    Poly result = p.expr();
    p.expect_end();
    return result;
}

RatFunc parse_ratfunc(std::string_view text) {
    Parser p(text);
    Poly numer = p.expr();
    if (auto slash_at = p.eat_slash()) {
        Poly denom = p.expr();
        p.expect_end();
        if (denom.is_zero()) throw ParseError("division by zero polynomial", *slash_at);
        return RatFunc(numer, denom);
    }
    p.expect_end();
    return RatFunc(numer);
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long long k = p.deg(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

std::string print_ratfunc(const RatFunc& f) {
    if (f.is_poly()) return print_poly(f.num());
    return "(" + print_poly(f.num()) + ") / (" + print_poly(f.den()) + ")";
}

}  // namespace powersum
