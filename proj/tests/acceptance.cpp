// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtime ceilings are part of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uqsl2/uqsl2.hpp"

using namespace uqsl2;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string summarize(const Report& r) {
    if (r.all_pass()) return std::to_string(r.checks.size()) + " checks";
    for (auto& c : r.checks)
        if (!c.pass) return "first failure: " + c.name + " " + c.detail;
    return "";
}

bool fold(Outcome& out, const Report& r) {
    if (!r.all_pass()) {
        out.pass = false;
        if (out.detail.empty()) out.detail = summarize(r);
        return false;
    }
    return true;
}

// --- criterion 1: the d=3 canonical families, symbol for symbol ---

Outcome criterion_paper_examples() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    auto Q = [](long e) { return RingScalar::q_power(e); };
    auto build = [&](FamilyBase fb, bool t, bool qi, bool zc) {
        return build_canonical(ctx, CanonicalFamily{fb, t, qi, zc}, 3);
    };
    auto expect = [&](const ExactMatrix<RingScalar>& got,
                      const std::vector<std::vector<RingScalar>>& rows, const char* name) {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                if (!(got.at(i, j) == rows[i][j]) ||
                    got.at(i, j).str() != rows[i][j].str()) {
                    out.pass = false;
                    if (out.detail.empty())
                        out.detail = std::string(name) + " entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")";
                }
    };
    const RingScalar o{0}, l{1};

    expect(build(FamilyBase::K, 0, 0, 0),
           {{Q(3), o, o, o}, {o, Q(1), o, o}, {o, o, Q(-1), o}, {o, o, o, Q(-3)}}, "K_q");

    expect(build(FamilyBase::E, 0, 0, 0),
           {{Q(-3), Q(3) - Q(-3), o, o},
            {o, Q(-1), Q(3) - Q(-1), o},
            {o, o, Q(1), Q(3) - Q(1)},
            {o, o, o, Q(3)}},
           "E_q");
    expect(build(FamilyBase::E, 0, 1, 0),
           {{Q(3), Q(-3) - Q(3), o, o},
            {o, Q(1), Q(-3) - Q(1), o},
            {o, o, Q(-1), Q(-3) - Q(-1)},
            {o, o, o, Q(-3)}},
           "E_q^-1");
    expect(build(FamilyBase::E, 1, 0, 0),
           {{Q(-3), o, o, o},
            {Q(3) - Q(-3), Q(-1), o, o},
            {o, Q(3) - Q(-1), Q(1), o},
            {o, o, Q(3) - Q(1), Q(3)}},
           "E_q^t");
    expect(build(FamilyBase::E, 1, 1, 0),
           {{Q(3), o, o, o},
            {Q(-3) - Q(3), Q(1), o, o},
            {o, Q(-3) - Q(1), Q(-1), o},
            {o, o, Q(-3) - Q(-1), Q(-3)}},
           "E_q^-1^t");
    expect(build(FamilyBase::E, 0, 0, 1),
           {{Q(3), o, o, o},
            {Q(3) - Q(1), Q(1), o, o},
            {o, Q(3) - Q(-1), Q(-1), o},
            {o, o, Q(3) - Q(-3), Q(-3)}},
           "ZE_qZ");
    expect(build(FamilyBase::E, 0, 1, 1),
           {{Q(-3), o, o, o},
            {Q(-3) - Q(-1), Q(-1), o, o},
            {o, Q(-3) - Q(1), Q(1), o},
            {o, o, Q(-3) - Q(3), Q(3)}},
           "ZE_q^-1Z");
    expect(build(FamilyBase::E, 1, 0, 1),
           {{Q(3), Q(3) - Q(1), o, o},
            {o, Q(1), Q(3) - Q(-1), o},
            {o, o, Q(-1), Q(3) - Q(-3)},
            {o, o, o, Q(-3)}},
           "ZE_q^tZ");
    expect(build(FamilyBase::E, 1, 1, 1),
           {{Q(-3), Q(-3) - Q(-1), o, o},
            {o, Q(-1), Q(-3) - Q(1), o},
            {o, o, Q(1), Q(-3) - Q(3)},
            {o, o, o, Q(3)}},
           "ZE_q^-1^tZ");

    auto i1 = q_int(1), i2 = q_int(2), i3 = q_int(3);
    expect(build(FamilyBase::N, 0, 0, 0),
           {{o, o, o, o}, {i1, o, o, o}, {o, Q(-1) * i2, o, o}, {o, o, Q(-2) * i3, o}},
           "N_q");
    expect(build(FamilyBase::N, 0, 1, 0),
           {{o, o, o, o}, {i1, o, o, o}, {o, Q(1) * i2, o, o}, {o, o, Q(2) * i3, o}},
           "N_q^-1");
    expect(build(FamilyBase::N, 1, 0, 0),
           {{o, i1, o, o}, {o, o, Q(-1) * i2, o}, {o, o, o, Q(-2) * i3}, {o, o, o, o}},
           "N_q^t");
    expect(build(FamilyBase::N, 1, 1, 0),
           {{o, i1, o, o}, {o, o, Q(1) * i2, o}, {o, o, o, Q(2) * i3}, {o, o, o, o}},
           "N_q^-1^t");
    expect(build(FamilyBase::N, 0, 0, 1),
           {{o, Q(-2) * i3, o, o}, {o, o, Q(-1) * i2, o}, {o, o, o, i1}, {o, o, o, o}},
           "ZN_qZ");
    expect(build(FamilyBase::N, 0, 1, 1),
           {{o, Q(2) * i3, o, o}, {o, o, Q(1) * i2, o}, {o, o, o, i1}, {o, o, o, o}},
           "ZN_q^-1Z");
    expect(build(FamilyBase::N, 1, 0, 1),
           {{o, o, o, o}, {Q(-2) * i3, o, o, o}, {o, Q(-1) * i2, o, o}, {o, o, i1, o}},
           "ZN_q^tZ");
    expect(build(FamilyBase::N, 1, 1, 1),
           {{o, o, o, o}, {Q(2) * i3, o, o, o}, {o, Q(1) * i2, o, o}, {o, o, i1, o}},
           "ZN_q^-1^tZ");

    if (build(FamilyBase::E, 0, 0, 0).at(0, 1).str() != "q^3 - q^-3") {
        out.pass = false;
        out.detail = "canonical grammar rendering of q^3 - q^-3";
    }
    return out;
}

Outcome criterion_algebra() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 8; ++d)
        if (!fold(out, suite_algebra(ctx, d))) break;
    return out;
}

Outcome criterion_rotator() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 8; ++d)
        if (!fold(out, suite_rotator(make_spec(ctx, d)))) break;
    return out;
}

Outcome criterion_transitions() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 8; ++d)
        if (!fold(out, suite_transitions(make_spec(ctx, d)))) break;
    return out;
}

Outcome criterion_pairing() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    std::mt19937_64 rng(42);
    auto random_scalar = [&]() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        while (true) {
            Rational r(num(rng), den(rng));
            if (!r.is_zero()) return RingScalar(r);
        }
    };
    for (long d = 0; d <= 8; ++d) {
        if (!fold(out, suite_gram(make_spec(ctx, d)))) break;
        FreeScalars<RingScalar> fs;
        fs.xy = random_scalar();
        fs.yz = random_scalar();
        fs.zx = random_scalar();
        fs.yx = random_scalar();
        fs.zy = random_scalar();
        if (!fold(out, suite_gram(make_spec(ctx, d, fs)))) break;
    }
    return out;
}

Outcome criterion_flags() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 6; ++d)
        if (!fold(out, suite_flags(make_spec(ctx, d)))) break;
    return out;
}

Outcome criterion_closedform() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 6; ++d)
        if (!fold(out, suite_closedform(make_spec(ctx, d)))) break;
    return out;
}

Outcome criterion_endo() {
    Outcome out{true, ""};
    const auto ctx = symbolic_context();
    for (long d = 0; d <= 6; ++d)
        if (!fold(out, suite_endo(make_spec(ctx, d)))) break;
    return out;
}

Outcome criterion_recognition() {
    Outcome out{true, ""};
    auto fail = [&](const std::string& w) {
        out.pass = false;
        if (out.detail.empty()) out.detail = w;
    };
    std::mt19937_64 rng(2024);
    auto random_nonzero = [&]() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 5);
        while (true) {
            Rational r(num(rng), den(rng));
            if (!r.is_zero()) return r;
        }
    };

    for (long d = 2; d <= 6; ++d)
        for (long qv : {2L, 3L}) {
            auto ctx = numeric_context(Rational(qv));
            ShapeTriple<Rational> t;
            t.d = d;
            t.X = build_canonical(ctx, CanonicalFamily{FamilyBase::K}, d);
            t.Y = build_canonical(ctx, CanonicalFamily{FamilyBase::E, false, true, true}, d);
            t.Z = build_canonical(ctx, CanonicalFamily{FamilyBase::E}, d);
            auto I = ExactMatrix<Rational>::identity(d + 1);
            ShapeTriple<Rational> s{d, random_nonzero() * I + random_nonzero() * t.X,
                                    random_nonzero() * I + random_nonzero() * t.Y,
                                    random_nonzero() * I + random_nonzero() * t.Z};
            try {
                auto res = recognize_triple(s);
                if (res.branch != Branch::quantum) fail("branch not quantum");
                else if (!(res.b.value() == Rational(1, qv * qv)))
                    fail("b != q^-2 at d=" + std::to_string(d) + ", q=" + std::to_string(qv));
                else if (!res.certificate.all_pass()) fail("certificate failed");
                else if (!(res.X == t.X && res.Y == t.Y && res.Z == t.Z))
                    fail("normalized triple differs from the canonical one");
                else if (!irreducibility_certificate(with_nilpotent_combinations(
                             res.q.value(), res.X, res.Y, res.Z)))
                    fail("irreducibility certificate failed");
            } catch (const Error& e) {
                fail(std::string("recognition threw: ") + e.what());
            }
        }

    // Classical d=1 fixture.
    try {
        using RMat = ExactMatrix<Rational>;
        ShapeTriple<Rational> t;
        t.d = 1;
        t.X = RMat::diagonal({Rational(-1), Rational(1)});
        t.Y = RMat(2, 2);
        t.Y.at(0, 0) = Rational(1);
        t.Y.at(1, 0) = Rational(1);
        t.Y.at(1, 1) = Rational(-1);
        t.Z = RMat(2, 2);
        t.Z.at(0, 0) = Rational(1);
        t.Z.at(0, 1) = Rational(-4);
        t.Z.at(1, 1) = Rational(-1);
        auto res = recognize_triple(t, std::optional<Rational>(),
                                    std::optional<Rational>(Rational(1)));
        if (res.branch != Branch::classical_sl2 || !res.certificate.all_pass())
            fail("classical fixture did not certify");
    } catch (const Error& e) {
        fail(std::string("classical fixture threw: ") + e.what());
    }

    // detect_b contract.
    if (detect_b<Rational>({Rational(-1), Rational(1)}).has_value())
        fail("detect_b not indeterminate at d=1");
    if (detect_b<Rational>({Rational(5)}).has_value())
        fail("detect_b not indeterminate at d=0");
    try {
        detect_b<Rational>({Rational(1), Rational(1), Rational(2)});
        fail("detect_b accepted coinciding entries");
    } catch (const RecognitionError&) {
    }
    try {
        detect_b<Rational>({Rational(1), Rational(2), Rational(3), Rational(5)});
        fail("detect_b accepted inconsistent ratios");
    } catch (const RecognitionError&) {
    }
    return out;
}

Outcome criterion_numeric_scale() {
    Outcome out{true, ""};
    const auto ctx = numeric_context(Rational(2));
    for (long d = 0; d <= 16; ++d)
        if (!fold(out, suite_algebra(ctx, d))) break;
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds; // 0 = no ceiling
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "paper-example reproduction (d=3 families, exact text)", 1.0,
         criterion_paper_examples},
        {2, "algebra suite, symbolic, d=0..8, all bases, both spaces", 60.0,
         criterion_algebra},
        {3, "rotator suite, d=0..8", 0.0, criterion_rotator},
        {4, "transition suite vs closed-form oracle, d=0..8", 0.0, criterion_transitions},
        {5, "pairing suite under two scalar assignments, d=0..8", 0.0, criterion_pairing},
        {6, "flag/decomposition suite, d=0..6", 0.0, criterion_flags},
        {7, "closed-form consistency, d=0..6", 0.0, criterion_closedform},
        {8, "endomorphism characterizations, d=0..6", 0.0, criterion_endo},
        {9, "recognition round-trip, classical fixture, detect_b contract", 0.0,
         criterion_recognition},
        {10, "numeric-backend algebra suite at q=2, d=0..16", 30.0,
         criterion_numeric_scale},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const Error& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over the ") +
                          std::to_string(c.limit_seconds) + "s ceiling";
        }
        std::printf("%s criterion %2d: %s (%.2fs%s%s)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, secs, out.detail.empty() ? "" : "; ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
