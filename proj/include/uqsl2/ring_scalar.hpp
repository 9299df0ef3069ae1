#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "uqsl2/errors.hpp"
#include "uqsl2/laurent.hpp"
#include "uqsl2/rational.hpp"

namespace uqsl2 {

namespace detail {

/// Ordinary-polynomial long division over Q. Inputs must have min_exp >= 0.
inline std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                       const LaurentPoly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    LaurentPoly quot, rem = a;
    const long db = b.degree();
    const Rational lb = b.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= db) {
        long e = rem.degree() - db;
        Rational c = rem.leading_coeff() / lb;
        LaurentPoly t = LaurentPoly::q_power(e, c);
        quot += t;
        rem -= t * b;
    }
    return {quot, rem};
}

inline LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
    return q;
}

/// Monic gcd over Q[q] of two ordinary polynomials.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading_coeff());
}

/// Scalar k such that k*p has coprime integer coefficients and positive
/// leading coefficient.
inline Rational primitive_factor(const LaurentPoly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.terms()) {
        (void)e;
        mpz_class n = c.num(), d = c.den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    mpq_class k(den_lcm, num_gcd);
    k.canonicalize();
    Rational r{k};
    if (p.leading_coeff().sign() < 0) r = -r;
    return r;
}

} // namespace detail

/// Element of the fraction field Q(q), stored as a reduced ratio of Laurent
/// polynomials in canonical form:
///   - denominator is an ordinary polynomial (min exponent 0) with nonzero
///     constant term, coprime integer coefficients, positive leading
///     coefficient;
///   - after clearing the numerator's q-power, gcd(numerator, denominator)=1.
/// Equality of canonical forms is structural and agrees with
/// cross-multiplication.
class RingScalar {
public:
    RingScalar() : num_(), den_(1) {}
    RingScalar(long c) : num_(c), den_(1) {}
    RingScalar(const Rational& c) : num_(c), den_(1) {}
    RingScalar(const LaurentPoly& p) : num_(p), den_(1) {}
    RingScalar(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    /// The generator q.
    static RingScalar q() { return RingScalar(LaurentPoly::q_power(1)); }
    static RingScalar q_power(long e) { return RingScalar(LaurentPoly::q_power(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }

    Rational to_rational() const {
        if (!is_rational())
            throw ParameterError("scalar is not a rational constant: " + str());
        return num_.constant_value();
    }

    RingScalar operator-() const {
        RingScalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RingScalar operator+(const RingScalar& a, const RingScalar& b) {
        return RingScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RingScalar operator-(const RingScalar& a, const RingScalar& b) {
        return RingScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RingScalar operator*(const RingScalar& a, const RingScalar& b) {
        return RingScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RingScalar operator/(const RingScalar& a, const RingScalar& b) {
        if (b.is_zero()) throw ArithmeticError("division by zero scalar");
        return RingScalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    RingScalar& operator+=(const RingScalar& o) { return *this = *this + o; }
    RingScalar& operator-=(const RingScalar& o) { return *this = *this - o; }
    RingScalar& operator*=(const RingScalar& o) { return *this = *this * o; }
    RingScalar& operator/=(const RingScalar& o) { return *this = *this / o; }

    friend bool operator==(const RingScalar& a, const RingScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RingScalar& a, const RingScalar& b) {
        return !(a == b);
    }

    /// q -> q^-1 on both numerator and denominator; an involution.
    RingScalar subst_q_inverse() const {
        return RingScalar(num_.subst_q_inverse(), den_.subst_q_inverse());
    }

    /// Exact value at q = q0. q0 must avoid {0, 1, -1} (the standing
    /// not-a-root-of-unity assumption restricted to Q).
    Rational eval_at(const Rational& q0) const {
        if (q0.is_zero() || q0 == Rational(1) || q0 == Rational(-1))
            throw ParameterError("evaluation point must avoid 0 and +-1");
        Rational d = den_.eval(q0);
        if (d.is_zero())
            throw EvaluationError("denominator vanishes at q = " + q0.str());
        return num_.eval(q0) / d;
    }

    /// Canonical text form. Terms print as `c*q^e` in strictly decreasing
    /// exponent order; a non-unit denominator prints as `(num)/(den)`.
    std::string str() const {
        if (den_.is_one()) return poly_str(num_);
        return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
    }

    static std::string poly_str(const LaurentPoly& p) {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const long e = it->first;
            const Rational& c = it->second;
            const bool neg = c.sign() < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = c.abs();
            if (e == 0) {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += (e == 1) ? "q" : "q^" + std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const RingScalar& s) {
        return os << s.str();
    }

private:
    LaurentPoly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw ArithmeticError("zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // Clear q-powers so the denominator has a nonzero constant term.
        long dshift = den_.min_exp();
        den_ = den_.shifted(-dshift);
        num_ = num_.shifted(-dshift);
        long nshift = num_.min_exp();
        LaurentPoly num0 = num_.shifted(-nshift);

        LaurentPoly g = detail::poly_gcd(num0, den_);
        if (!g.is_one() && !g.is_zero()) {
            num0 = detail::poly_exact_div(num0, g);
            den_ = detail::poly_exact_div(den_, g);
        }
        Rational k = detail::primitive_factor(den_);
        den_ = den_.scaled(k);
        num_ = num0.scaled(k).shifted(nshift);
    }
};

// ---- the scalars-module operations on the symbolic backend ----

/// [n] = (q^n - q^-n)/(q - q^-1) expanded as q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline RingScalar q_int(long n) {
    if (n == 0) return RingScalar(0);
    if (n < 0) return -q_int(-n);
    LaurentPoly p;
    for (long k = 0; k < n; ++k) p += LaurentPoly::q_power(n - 1 - 2 * k);
    return RingScalar(p);
}

inline RingScalar q_factorial(long n) {
    if (n < 0) throw ParameterError("q-factorial of a negative integer");
    RingScalar r(1);
    for (long k = 2; k <= n; ++k) r *= q_int(k);
    return r;
}

/// [n]!/([i]![n-i]!); the division is exact.
inline RingScalar q_binom(long n, long i) {
    if (n < 0 || i < 0 || i > n)
        throw ParameterError("q-binomial arguments out of range: n=" +
                             std::to_string(n) + ", i=" + std::to_string(i));
    RingScalar r = q_factorial(n) / (q_factorial(i) * q_factorial(n - i));
    if (!r.is_polynomial())
        throw ConsistencyError("q-binomial failed to reduce to a polynomial");
    return r;
}

inline RingScalar subst_q_inverse(const RingScalar& s) { return s.subst_q_inverse(); }

inline Rational eval_at(const RingScalar& s, const Rational& q0) {
    return s.eval_at(q0);
}

// ---- exact square roots, used by the recognizer ----

inline std::optional<Rational> sqrt_exact_scalar(const Rational& r) {
    return r.sqrt_exact();
}

/// Square root of a Laurent monomial c*q^{2k} with square rational c; other
/// shapes have no root in Q(q) expressible without field extension.
inline std::optional<RingScalar> sqrt_exact_scalar(const RingScalar& s) {
    if (!s.is_polynomial() || !s.num().is_monomial()) return std::nullopt;
    long e = s.num().min_exp();
    if (e % 2 != 0) return std::nullopt;
    auto c = s.num().coeff(e).sqrt_exact();
    if (!c) return std::nullopt;
    return RingScalar(LaurentPoly::q_power(e / 2, *c));
}

} // namespace uqsl2
