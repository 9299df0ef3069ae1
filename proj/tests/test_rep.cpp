#include <catch2/catch_amalgamated.hpp>

#include "uqsl2/rep.hpp"

using namespace uqsl2;

namespace {

const QContext<RingScalar> ctx = symbolic_context();
using FB = FamilyBase;

struct Cell {
    FB base;
    bool t, qi, zc;
    bool neg;
};

ExactMatrix<RingScalar> build_cell(const Cell& c, long d) {
    auto m = build_canonical(ctx, CanonicalFamily{c.base, c.t, c.qi, c.zc}, d);
    return c.neg ? -m : m;
}

// The x, y, z representation table on V*, transcribed entry by entry. The
// implementation derives it from the V table by q -> q^-1; this pins the
// derivation to an explicit transcription.
const Cell kVsmat[12][3] = {
    {{FB::K, 0, 1, 0, 0}, {FB::E, 0, 0, 1, 0}, {FB::E, 0, 1, 0, 0}},
    {{FB::K, 0, 1, 0, 0}, {FB::E, 1, 1, 0, 0}, {FB::E, 1, 0, 1, 0}},
    {{FB::K, 0, 0, 0, 0}, {FB::E, 0, 0, 0, 0}, {FB::E, 0, 1, 1, 0}},
    {{FB::K, 0, 0, 0, 0}, {FB::E, 1, 1, 1, 0}, {FB::E, 1, 0, 0, 0}},

    {{FB::E, 0, 1, 0, 0}, {FB::K, 0, 1, 0, 0}, {FB::E, 0, 0, 1, 0}},
    {{FB::E, 1, 0, 1, 0}, {FB::K, 0, 1, 0, 0}, {FB::E, 1, 1, 0, 0}},
    {{FB::E, 0, 1, 1, 0}, {FB::K, 0, 0, 0, 0}, {FB::E, 0, 0, 0, 0}},
    {{FB::E, 1, 0, 0, 0}, {FB::K, 0, 0, 0, 0}, {FB::E, 1, 1, 1, 0}},

    {{FB::E, 0, 0, 1, 0}, {FB::E, 0, 1, 0, 0}, {FB::K, 0, 1, 0, 0}},
    {{FB::E, 1, 1, 0, 0}, {FB::E, 1, 0, 1, 0}, {FB::K, 0, 1, 0, 0}},
    {{FB::E, 0, 0, 0, 0}, {FB::E, 0, 1, 1, 0}, {FB::K, 0, 0, 0, 0}},
    {{FB::E, 1, 1, 1, 0}, {FB::E, 1, 0, 0, 0}, {FB::K, 0, 0, 0, 0}},
};

// The n_x, n_y, n_z representation table on V*.
const Cell kNxmats[12][3] = {
    {{FB::T, 0, 1, 0, 0}, {FB::N, 0, 0, 1, 1}, {FB::N, 0, 1, 0, 0}},
    {{FB::T, 1, 1, 0, 0}, {FB::N, 1, 1, 0, 0}, {FB::N, 1, 0, 1, 1}},
    {{FB::T, 0, 0, 0, 1}, {FB::N, 0, 0, 0, 1}, {FB::N, 0, 1, 1, 0}},
    {{FB::T, 1, 0, 0, 1}, {FB::N, 1, 1, 1, 0}, {FB::N, 1, 0, 0, 1}},

    {{FB::N, 0, 1, 0, 0}, {FB::T, 0, 1, 0, 0}, {FB::N, 0, 0, 1, 1}},
    {{FB::N, 1, 0, 1, 1}, {FB::T, 1, 1, 0, 0}, {FB::N, 1, 1, 0, 0}},
    {{FB::N, 0, 1, 1, 0}, {FB::T, 0, 0, 0, 1}, {FB::N, 0, 0, 0, 1}},
    {{FB::N, 1, 0, 0, 1}, {FB::T, 1, 0, 0, 1}, {FB::N, 1, 1, 1, 0}},

    {{FB::N, 0, 0, 1, 1}, {FB::N, 0, 1, 0, 0}, {FB::T, 0, 1, 0, 0}},
    {{FB::N, 1, 1, 0, 0}, {FB::N, 1, 0, 1, 1}, {FB::T, 1, 1, 0, 0}},
    {{FB::N, 0, 0, 0, 1}, {FB::N, 0, 1, 1, 0}, {FB::T, 0, 0, 0, 1}},
    {{FB::N, 1, 1, 1, 0}, {FB::N, 1, 0, 0, 1}, {FB::T, 1, 0, 0, 1}},
};

} // namespace

TEST_CASE("dual-space tables match their explicit transcription") {
    for (long d : {0L, 1L, 3L}) {
        for (BasisId b : all_bases()) {
            const int r = b.index();
            CHECK(rep(ctx, Space::V_dual, b, Gen::x, d) == build_cell(kVsmat[r][0], d));
            CHECK(rep(ctx, Space::V_dual, b, Gen::y, d) == build_cell(kVsmat[r][1], d));
            CHECK(rep(ctx, Space::V_dual, b, Gen::z, d) == build_cell(kVsmat[r][2], d));
            CHECK(rep(ctx, Space::V_dual, b, Gen::n_x, d) == build_cell(kNxmats[r][0], d));
            CHECK(rep(ctx, Space::V_dual, b, Gen::n_y, d) == build_cell(kNxmats[r][1], d));
            CHECK(rep(ctx, Space::V_dual, b, Gen::n_z, d) == build_cell(kNxmats[r][2], d));
        }
    }
}

TEST_CASE("representation table spot checks") {
    const long d = 2;
    CHECK(rep(ctx, Space::V, BasisId{Axis::y, false, Flavor::row}, Gen::x, d) ==
          build_canonical(ctx, CanonicalFamily{FB::E}, d));
    CHECK(rep(ctx, Space::V, BasisId{Axis::x, false, Flavor::row}, Gen::x, d) ==
          build_canonical(ctx, CanonicalFamily{FB::K}, d));
    CHECK(rep(ctx, Space::V_dual, BasisId{Axis::y, false, Flavor::row}, Gen::n_y, d) ==
          build_canonical(ctx, CanonicalFamily{FB::T, false, true, false}, d));
    CHECK(rep(ctx, Space::V, BasisId{Axis::z, true, Flavor::col}, Gen::n_x, d) ==
          build_canonical(ctx, CanonicalFamily{FB::N, true, false, true}, d));
}

TEST_CASE("the table is invariant under the simultaneous rotation") {
    auto rot_basis = [](BasisId b) { return BasisId{next(b.axis), b.inverted, b.flavor}; };
    auto rot_gen = [](Gen g) {
        switch (g) {
            case Gen::x: return Gen::y;
            case Gen::y: return Gen::z;
            case Gen::z: return Gen::x;
            case Gen::n_x: return Gen::n_y;
            case Gen::n_y: return Gen::n_z;
            default: return Gen::n_x;
        }
    };
    for (BasisId b : all_bases())
        for (Gen g : {Gen::x, Gen::y, Gen::z, Gen::n_x, Gen::n_y, Gen::n_z})
            CHECK(rep(ctx, Space::V, b, g, 3) ==
                  rep(ctx, Space::V, rot_basis(b), rot_gen(g), 3));
}

TEST_CASE("y inverse is materialized by exact inversion") {
    for (long d : {0L, 1L, 3L})
        for (Space s : kSpaces)
            for (BasisId b : all_bases())
                CHECK(rep(ctx, s, b, Gen::y, d) * rep(ctx, s, b, Gen::y_inv, d) ==
                      ExactMatrix<RingScalar>::identity(d + 1));
}

TEST_CASE("algebra verification examples") {
    CHECK(verify_algebra(ctx, Space::V, BasisId{Axis::y, false, Flavor::row}, 2).all_pass());

    // Degenerate d=0: everything passes and the nilpotent parts vanish.
    auto r0 = verify_algebra(ctx, Space::V, BasisId{Axis::y, false, Flavor::row}, 0);
    CHECK(r0.all_pass());
    CHECK(rep(ctx, Space::V, BasisId{Axis::y, false, Flavor::row}, Gen::n_x, 0).is_zero());

    CHECK(verify_algebra(ctx, Space::V_dual, BasisId{Axis::x, false, Flavor::col}, 3)
              .all_pass());
}

TEST_CASE("dagger transpose examples") {
    const BasisId yrow{Axis::y, false, Flavor::row};
    CHECK(rep(ctx, Space::V, yrow, Gen::x, 2).transpose() ==
          rep(ctx, Space::V_dual, BasisId{Axis::y, true, Flavor::col}, Gen::x, 2));

    const BasisId xrow{Axis::x, false, Flavor::row};
    CHECK(rep(ctx, Space::V, xrow, Gen::n_z, 1).transpose() ==
          -rep(ctx, Space::V_dual, BasisId{Axis::x, true, Flavor::col}, Gen::n_z, 1));

    for (BasisId b : all_bases()) CHECK(dagger_transpose_check(ctx, b, 0).all_pass());
    CHECK(dagger_transpose_check(ctx, yrow, 3).all_pass());
}

TEST_CASE("failure reporting carries the first discrepant entry") {
    Report r;
    auto a = ExactMatrix<RingScalar>::identity(2);
    auto b = a;
    b.at(1, 1) = RingScalar(2);
    r.check_equal("probe", a, b);
    REQUIRE(r.checks.size() == 1);
    CHECK_FALSE(r.checks[0].pass);
    CHECK(r.checks[0].detail.find("(1,1)") != std::string::npos);
    CHECK_FALSE(r.all_pass());
    CHECK(r.failures() == 1);
}
