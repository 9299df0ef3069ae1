#include <catch2/catch_amalgamated.hpp>

#include "uqsl2/transitions.hpp"
#include "uqsl2/verify.hpp"

using namespace uqsl2;

namespace {

const QContext<RingScalar> ctx = symbolic_context();

RingScalar Q(long e) { return RingScalar::q_power(e); }

} // namespace

TEST_CASE("transition examples") {
    auto spec = make_spec(ctx, 1);
    const BasisId yrow{Axis::y, false, Flavor::row};

    CHECK(transition(spec, Space::V, yrow, yrow.flipped()) ==
          build_canonical(ctx, CanonicalFamily{FamilyBase::Z}, 1));

    CHECK(transition(spec, Space::V, yrow, BasisId{Axis::y, false, Flavor::col}) ==
          ExactMatrix<RingScalar>::diagonal({RingScalar(1), RingScalar(-1)}));

    for (long d : {0L, 2L}) {
        auto sp = make_spec(ctx, d);
        const BasisId xr{Axis::x, false, Flavor::row}, yr{Axis::y, false, Flavor::row};
        CHECK(transition(sp, Space::V, xr, yr) ==
              (sp.pairing(Axis::y, Axis::z) / sp.pairing(Axis::x, Axis::z)) *
                  build_canonical(ctx, CanonicalFamily{FamilyBase::P}, d));
        for (BasisId b : all_bases())
            CHECK(transition(sp, Space::V, b, b) == ExactMatrix<RingScalar>::identity(d + 1));
    }
}

TEST_CASE("tabulated edge census") {
    auto spec = make_spec(ctx, 2);
    for (Space s : kSpaces) {
        auto edges = tabulated_edges(spec, s);
        CHECK(edges.size() == 48);
        size_t inv = 0, diag = 0, lower = 0, rot = 0;
        for (auto& e : edges) {
            if (e.provenance == "inversion") ++inv;
            else if (e.provenance == "diagonal") ++diag;
            else if (e.provenance == "lower-triangular") ++lower;
            else if (e.provenance == "rotation") ++rot;
        }
        CHECK(inv == 12);
        CHECK(diag == 12);
        CHECK(lower == 12);
        CHECK(rot == 12);
    }
}

TEST_CASE("routing agrees with the closed-form oracle for every pair") {
    for (long d : {0L, 2L}) {
        auto spec = make_spec(ctx, d);
        for (Space s : kSpaces)
            for (BasisId a : all_bases())
                for (BasisId b : all_bases()) {
                    INFO(space_name(s) << " " << a.str() << " -> " << b.str());
                    CHECK(transition(spec, s, a, b) == transition_from_bases(spec, s, a, b));
                }
    }
}

TEST_CASE("transition suite passes, including nontrivial scalars") {
    for (long d : {0L, 1L, 3L}) {
        auto r = suite_transitions(make_spec(ctx, d));
        for (auto& c : r.checks) {
            INFO("d=" << d << " " << c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
    FreeScalars<RingScalar> fs;
    fs.xy = RingScalar(2);
    fs.yz = Q(1);
    fs.zx = RingScalar(5);
    fs.yx = RingScalar(Rational(7, 3));
    fs.zy = RingScalar(Rational(1, 2));
    CHECK(suite_transitions(make_spec(ctx, 2, fs)).all_pass());

    auto nctx = numeric_context(Rational(3));
    CHECK(suite_transitions(make_spec(nctx, 4)).all_pass());
}

TEST_CASE("rotator representation table") {
    auto spec = make_spec(ctx, 2);
    CHECK(rotator_rep(spec, Space::V, BasisId{Axis::x, false, Flavor::row}).matrix ==
          build_canonical(ctx, CanonicalFamily{FamilyBase::P}, 2));
    CHECK(rotator_rep(spec, Space::V, BasisId{Axis::z, false, Flavor::col}).matrix ==
          build_canonical(ctx, CanonicalFamily{FamilyBase::P, true}, 2));
    CHECK(rotator_rep(spec, Space::V_dual, BasisId{Axis::y, true, Flavor::row}).matrix ==
          build_canonical(ctx, CanonicalFamily{FamilyBase::P, false, true, true}, 2));
}

TEST_CASE("rotator suite passes at small d on both backends") {
    for (long d : {0L, 1L, 2L}) {
        auto r = suite_rotator(make_spec(ctx, d));
        for (auto& c : r.checks) {
            INFO("d=" << d << " " << c.name << ": " << c.detail);
            CHECK(c.pass);
        }
    }
    auto nctx = numeric_context(Rational(5, 2));
    CHECK(suite_rotator(make_spec(nctx, 3)).all_pass());
}
