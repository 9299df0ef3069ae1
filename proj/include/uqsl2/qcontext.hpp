#pragma once

#include "uqsl2/errors.hpp"
#include "uqsl2/rational.hpp"
#include "uqsl2/ring_scalar.hpp"

namespace uqsl2 {

/// Arithmetic context carrying the distinguished invertible element q and the
/// q-combinatorial quantities built from it. Instantiated with
/// S = RingScalar (q is the generator of Q(q)) or S = Rational (q is a fixed
/// rational, the numeric backend). All members are pure.
template <class S>
struct QContext {
    S q;

    S one() const { return S(1); }
    S zero() const { return S(0); }
    S from_long(long n) const { return S(n); }

    S q_pow(long e) const {
        S r(1);
        S base = e >= 0 ? q : S(1) / q;
        long k = e >= 0 ? e : -e;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    /// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0, [-n] = -[n].
    S q_int(long n) const {
        if (n == 0) return S(0);
        if (n < 0) return S(0) - q_int(-n);
        S r(0);
        for (long k = 0; k < n; ++k) r += q_pow(n - 1 - 2 * k);
        return r;
    }

    S q_fact(long n) const {
        if (n < 0) throw ParameterError("q-factorial of a negative integer");
        S r(1);
        for (long k = 2; k <= n; ++k) r *= q_int(k);
        return r;
    }

    S q_binom(long n, long i) const {
        if (n < 0 || i < 0 || i > n)
            throw ParameterError("q-binomial arguments out of range: n=" +
                                 std::to_string(n) + ", i=" + std::to_string(i));
        return q_fact(n) / (q_fact(i) * q_fact(n - i));
    }

    S sign_pow(long k) const {
        return ((k % 2 + 2) % 2 == 0) ? S(1) : S(-1);
    }

    /// binom(n,2) as a plain integer, the exponent workhorse of the tables.
    static long choose2(long n) { return n * (n - 1) / 2; }

    /// Same tables at q^-1; realizes every "replace q by q^-1" step.
    QContext inverted() const { return QContext{S(1) / q}; }
};

/// A formal q-integer [n], expanded on demand against a context.
struct QInt {
    long n;

    template <class S>
    S expand(const QContext<S>& ctx) const {
        return ctx.q_int(n);
    }

    QInt operator-() const { return QInt{-n}; }
    friend bool operator==(const QInt&, const QInt&) = default;
};

inline QContext<RingScalar> symbolic_context() {
    return QContext<RingScalar>{RingScalar::q()};
}

inline QContext<Rational> numeric_context(const Rational& q0) {
    if (q0.is_zero() || q0 == Rational(1) || q0 == Rational(-1))
        throw ParameterError("numeric backend requires q not in {0, 1, -1}");
    return QContext<Rational>{q0};
}

} // namespace uqsl2
