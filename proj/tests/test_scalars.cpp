#include <catch2/catch_amalgamated.hpp>

#include "uqsl2/qcontext.hpp"
#include "uqsl2/ring_scalar.hpp"
#include "uqsl2/scalar_text.hpp"

using namespace uqsl2;

namespace {

RingScalar Q(long e) { return RingScalar::q_power(e); }

/// Independent oracle for [n]: the defining quotient (q^n - q^-n)/(q - q^-1)
/// evaluated by exact field division.
RingScalar q_int_by_division(long n) {
    return (Q(n) - Q(-n)) / (Q(1) - Q(-1));
}

} // namespace

TEST_CASE("q_int examples and division oracle") {
    CHECK(q_int(0) == RingScalar(0));
    CHECK(q_int(1) == RingScalar(1));
    CHECK(q_int(3) == Q(2) + RingScalar(1) + Q(-2));
    CHECK(q_int(-4) == -q_int(4));
    for (long n = -10; n <= 10; ++n) CHECK(q_int(n) == q_int_by_division(n));
}

TEST_CASE("q_int Pascal-style recurrence") {
    // [m+n] = q^n [m] + q^-m [n]
    for (long m = -8; m <= 8; ++m)
        for (long n = -8; n <= 8; ++n)
            CHECK(q_int(m + n) == Q(n) * q_int(m) + Q(-m) * q_int(n));
}

TEST_CASE("q_binom examples, symmetry, domain errors") {
    CHECK(q_binom(4, 0) == RingScalar(1));
    CHECK(q_binom(4, 4) == RingScalar(1));
    CHECK(q_binom(3, 1) == q_int(3));
    CHECK(q_binom(2, 1) == q_int(2));
    for (long n = 0; n <= 10; ++n)
        for (long i = 0; i <= n; ++i) {
            CHECK(q_binom(n, i) == q_binom(n, n - i));
            CHECK(q_binom(n, i).is_polynomial());
        }
    CHECK_THROWS_AS(q_binom(3, 4), ParameterError);
    CHECK_THROWS_AS(q_binom(3, -1), ParameterError);
}

TEST_CASE("subst_q_inverse examples and properties") {
    CHECK(subst_q_inverse(Q(3) - Q(-1)) == Q(-3) - Q(1));
    CHECK(subst_q_inverse(RingScalar(1)) == RingScalar(1));
    for (long n = 0; n <= 10; ++n) CHECK(subst_q_inverse(q_int(n)) == q_int(n));
    for (long n = 0; n <= 10; ++n)
        for (long i = 0; i <= n; ++i)
            CHECK(subst_q_inverse(q_binom(n, i)) == q_binom(n, i));

    const RingScalar s = (Q(3) + RingScalar(Rational(2, 3))) / (Q(2) - RingScalar(5));
    const RingScalar t = Q(-2) * (Q(1) + RingScalar(7));
    CHECK(subst_q_inverse(subst_q_inverse(s)) == s);
    CHECK(subst_q_inverse(s + t) == subst_q_inverse(s) + subst_q_inverse(t));
    CHECK(subst_q_inverse(s * t) == subst_q_inverse(s) * subst_q_inverse(t));
    CHECK(subst_q_inverse(s / t) == subst_q_inverse(s) / subst_q_inverse(t));
}

TEST_CASE("eval_at examples and errors") {
    CHECK(eval_at(q_int(2), Rational(2)) == Rational(5, 2));
    CHECK(eval_at(Q(3), Rational(2)) == Rational(8));
    CHECK(eval_at(q_binom(2, 1), Rational(3)) == Rational(10, 3));
    CHECK_THROWS_AS(eval_at(Q(1), Rational(0)), ParameterError);
    CHECK_THROWS_AS(eval_at(Q(1), Rational(1)), ParameterError);
    CHECK_THROWS_AS(eval_at(Q(1), Rational(-1)), ParameterError);
    // Denominator vanishing at the evaluation point.
    const RingScalar s = RingScalar(1) / (Q(1) - RingScalar(2));
    CHECK_THROWS_AS(eval_at(s, Rational(2)), EvaluationError);
}

TEST_CASE("eval_at is multiplicative") {
    const RingScalar samples[] = {
        q_int(3),
        q_binom(4, 2),
        (Q(2) - RingScalar(3)) / (Q(1) + RingScalar(1)),
        Q(-3) + RingScalar(Rational(1, 2)),
    };
    const Rational points[] = {Rational(2), Rational(3), Rational(5, 2)};
    for (const auto& s : samples)
        for (const auto& t : samples)
            for (const auto& q0 : points)
                CHECK(eval_at(s * t, q0) == eval_at(s, q0) * eval_at(t, q0));
}

TEST_CASE("canonical rational-function form") {
    // (q^2 - 1)/(q - 1) reduces to q + 1.
    const RingScalar a = (Q(2) - RingScalar(1)) / (Q(1) - RingScalar(1));
    CHECK(a == Q(1) + RingScalar(1));
    CHECK(a.is_polynomial());

    // Denominator gets its q-power cleared and is primitive with positive
    // leading coefficient.
    const RingScalar b = RingScalar(1) / (Q(2) + Q(1));
    CHECK(b.den() == (LaurentPoly::q_power(1) + LaurentPoly(1)));
    CHECK(b.num() == LaurentPoly::q_power(-1));
    CHECK(b.str() == "(q^-1)/(q + 1)");

    const RingScalar c = RingScalar(1) / (RingScalar(Rational(-1, 6)) * (Q(1) + RingScalar(1)));
    CHECK(c.den().leading_coeff() == Rational(1));
    CHECK(c.den().coeff(0) == Rational(1));
    CHECK(c.num().coeff(0) == Rational(-6));

    // Equality agrees with cross-multiplication.
    const RingScalar u = (Q(1) - RingScalar(1)) / (Q(2) + RingScalar(2));
    const RingScalar v = (Q(2) - Q(1)) / (Q(3) + RingScalar(2) * Q(1));
    CHECK(u == v);
    CHECK(u.num() * v.den() == v.num() * u.den());
}

TEST_CASE("scalar text grammar round-trips") {
    CHECK((Q(3) - Q(-3)).str() == "q^3 - q^-3");
    CHECK(RingScalar(0).str() == "0");
    CHECK(q_int(3).str() == "q^2 + 1 + q^-2");
    CHECK((RingScalar(Rational(3, 2)) * Q(2)).str() == "3/2*q^2");
    CHECK((-Q(1)).str() == "-q");
    CHECK(RingScalar(Rational(-5, 7)).str() == "-5/7");

    const RingScalar samples[] = {
        RingScalar(0),
        RingScalar(Rational(22, 7)),
        Q(3) - Q(-3),
        q_binom(5, 2),
        (Q(2) - RingScalar(3)) / (Q(1) + RingScalar(1)),
        -q_int(4) / (Q(2) + RingScalar(Rational(1, 3))),
    };
    for (const auto& s : samples) CHECK(parse_ring_scalar(s.str()) == s);

    CHECK(parse_ring_scalar("q ^ 2 + 1") == Q(2) + RingScalar(1));
    CHECK_THROWS_AS(parse_ring_scalar("q +"), ParseError);
    CHECK_THROWS_AS(parse_ring_scalar("bogus"), ParseError);
    CHECK_THROWS_AS(parse_rational_scalar("q + 1"), ParseError);
    CHECK(parse_rational_scalar("-7/3") == Rational(-7, 3));
}

TEST_CASE("term-count guard") {
    const size_t saved = LaurentPoly::get_term_limit();
    LaurentPoly::set_term_limit(8);
    LaurentPoly big;
    for (long e = 0; e < 8; ++e) big += LaurentPoly::q_power(e);
    CHECK_THROWS_AS(big * big, ResourceError);
    LaurentPoly::set_term_limit(saved);
    CHECK_NOTHROW(big * big);
}

TEST_CASE("rational extras") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(9, 4).sqrt_exact().value() == Rational(3, 2));
    CHECK_FALSE(Rational(2).sqrt_exact().has_value());
    CHECK_FALSE(Rational(-4).sqrt_exact().has_value());
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
}

TEST_CASE("numeric context guards") {
    CHECK_THROWS_AS(numeric_context(Rational(0)), ParameterError);
    CHECK_THROWS_AS(numeric_context(Rational(1)), ParameterError);
    CHECK_THROWS_AS(numeric_context(Rational(-1)), ParameterError);
    auto ctx = numeric_context(Rational(2));
    CHECK(ctx.q_int(2) == Rational(5, 2));
    CHECK(ctx.q_binom(2, 1) == Rational(5, 2));
    CHECK(ctx.inverted().q == Rational(1, 2));
}

TEST_CASE("formal q-integers expand consistently") {
    auto ctx = symbolic_context();
    CHECK(QInt{0}.expand(ctx) == RingScalar(0));
    CHECK(QInt{1}.expand(ctx) == RingScalar(1));
    for (long n = 1; n <= 8; ++n)
        CHECK((-QInt{n}).expand(ctx) == RingScalar(0) - QInt{n}.expand(ctx));
    auto nctx = numeric_context(Rational(2));
    CHECK(QInt{2}.expand(nctx) == Rational(5, 2));
}

TEST_CASE("symbolic context matches free functions") {
    auto ctx = symbolic_context();
    for (long n = -6; n <= 6; ++n) CHECK(ctx.q_int(n) == q_int(n));
    for (long n = 0; n <= 6; ++n)
        for (long i = 0; i <= n; ++i) CHECK(ctx.q_binom(n, i) == q_binom(n, i));
    // The inverted context realizes q -> q^-1.
    for (long e = -5; e <= 5; ++e)
        CHECK(ctx.inverted().q_pow(e) == Q(-e));
}
