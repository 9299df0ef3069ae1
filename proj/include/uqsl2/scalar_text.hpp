#pragma once

#include <cctype>
#include <string>

#include "uqsl2/errors.hpp"
#include "uqsl2/ring_scalar.hpp"

namespace uqsl2 {

namespace detail {

/// Recursive-descent parser for the canonical scalar grammar:
///   scalar  := ratfunc | poly
///   ratfunc := '(' poly ')' '/' '(' poly ')'
///   poly    := ['+'|'-'] term (('+'|'-') term)*
///   term    := coef ['*' qpow] | qpow
///   coef    := uint ['/' uint]
///   qpow    := 'q' ['^' int]
class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    RingScalar parse() {
        skip_ws();
        RingScalar result;
        if (peek() == '(') {
            expect('(');
            LaurentPoly num = parse_poly();
            expect(')');
            expect('/');
            expect('(');
            LaurentPoly den = parse_poly();
            expect(')');
            result = RingScalar(num, den);
        } else {
            result = RingScalar(parse_poly());
        }
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters");
        return result;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar parse error at offset " + std::to_string(pos_) +
                         ": " + what + " in '" + s_ + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    mpz_class parse_uint() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; advance(); }
        mpz_class v = parse_uint();
        if (!v.fits_slong_p()) fail("exponent out of range");
        long r = v.get_si();
        return neg ? -r : r;
    }

    LaurentPoly parse_poly() {
        LaurentPoly p;
        skip_ws();
        int sign = 1;
        if (peek() == '+') advance();
        else if (peek() == '-') { sign = -1; advance(); }
        p += parse_term(sign);
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') { advance(); p += parse_term(1); }
            else if (c == '-') { advance(); p += parse_term(-1); }
            else break;
        }
        return p;
    }

    LaurentPoly parse_term(int sign) {
        skip_ws();
        Rational coeff(sign);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_uint();
            mpz_class den = 1;
            // '/' begins a fractional coefficient only when followed by a
            // digit; "(...)/(" is handled one level up.
            if (peek() == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                advance();
                den = parse_uint();
                if (den == 0) fail("zero denominator");
            }
            coeff = coeff * Rational(mpq_class(num, den));
            saw_coeff = true;
            skip_ws();
            if (peek() == '*') { advance(); skip_ws(); }
        }
        long exp = 0;
        if (peek() == 'q') {
            advance();
            exp = 1;
            skip_ws();
            if (peek() == '^') { advance(); exp = parse_int(); }
        } else if (!saw_coeff) {
            fail("expected coefficient or 'q'");
        }
        return LaurentPoly::q_power(exp, coeff);
    }
};

} // namespace detail

inline RingScalar parse_ring_scalar(const std::string& text) {
    return detail::ScalarParser(text).parse();
}

inline Rational parse_rational_scalar(const std::string& text) {
    RingScalar s = parse_ring_scalar(text);
    if (!s.is_rational())
        throw ParseError("expected a rational constant, got '" + text + "'");
    return s.to_rational();
}

template <class S>
S parse_scalar(const std::string& text);

template <>
inline RingScalar parse_scalar<RingScalar>(const std::string& text) {
    return parse_ring_scalar(text);
}

template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
    return parse_rational_scalar(text);
}

} // namespace uqsl2
