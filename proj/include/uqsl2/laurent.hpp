#pragma once

#include <atomic>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "uqsl2/errors.hpp"
#include "uqsl2/rational.hpp"

namespace uqsl2 {

/// Laurent polynomial in q with rational coefficients, kept in canonical
/// sparse form: a map exponent -> coefficient holding no zero coefficients.
///
/// A global term-count guard bounds intermediate blowup; operations that
/// would exceed it throw ResourceError instead of grinding on.
class LaurentPoly {
public:
    using TermMap = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = Rational(c); }
    LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[0] = c; }

    static LaurentPoly q_power(long e, const Rational& coeff = Rational(1)) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_[e] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    size_t num_terms() const { return terms_.size(); }
    long min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    long max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    /// Degree as an ordinary polynomial; callers must ensure min_exp() >= 0.
    long degree() const { return max_exp(); }

    Rational coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational leading_coeff() const {
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    const TermMap& terms() const { return terms_; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        check_guard();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        check_guard();
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        r.check_guard();
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
        return r;
    }

    /// Multiply by q^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    /// q -> q^-1 (negate every exponent). An involution.
    LaurentPoly subst_q_inverse() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    Rational eval(const Rational& q0) const {
        if (q0.is_zero() && min_exp() < 0)
            throw EvaluationError("negative q-power evaluated at q = 0");
        Rational acc(0);
        for (auto& [e, c] : terms_) acc += c * q0.pow(e);
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    static void set_term_limit(size_t n) { term_limit().store(n); }
    static size_t get_term_limit() { return term_limit().load(); }

private:
    TermMap terms_;

    static std::atomic<size_t>& term_limit() {
        static std::atomic<size_t> limit{10000};
        return limit;
    }

    void add_term(long e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void check_guard() const {
        if (terms_.size() > term_limit().load())
            throw ResourceError("polynomial term count exceeds guard (" +
                                std::to_string(term_limit().load()) + " terms)");
    }
};

} // namespace uqsl2
