#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "uqsl2/errors.hpp"

namespace uqsl2 {

/// Arbitrary-precision rational number. Thin value wrapper around GMP's
/// mpq_class that pins down construction, canonical text form ("p" or "p/r")
/// and the few exact-arithmetic extras the library needs (exact square root,
/// integer powers). Always stored canonicalized.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw ArithmeticError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational parse(const std::string& text) {
        mpq_class v;
        if (v.set_str(text, 10) != 0)
            throw ParseError("cannot parse rational: '" + text + "'");
        if (v.get_den() == 0)
            throw ParseError("zero denominator in rational: '" + text + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArithmeticError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw ArithmeticError("0 raised to a negative power");
            return Rational(0);
        }
        mpz_class n = v_.get_num(), d = v_.get_den();
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_class np, dp;
        mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), k);
        mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), k);
        mpq_class r = (e > 0) ? mpq_class(np, dp) : mpq_class(dp, np);
        r.canonicalize();
        return Rational(std::move(r));
    }

    /// Exact square root, if one exists in Q.
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(mpq_class(rn, rd));
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

} // namespace uqsl2
