#include <catch2/catch_amalgamated.hpp>

#include "uqsl2/module_model.hpp"
#include "uqsl2/transitions.hpp"

using namespace uqsl2;

namespace {

// Evaluating the symbolic model at q0 must reproduce the rational-backend
// model exactly, object by object.

ExactMatrix<Rational> eval_matrix(const ExactMatrix<RingScalar>& m, const Rational& q0) {
    return map_matrix<Rational>(m, [&](const RingScalar& s) { return s.eval_at(q0); });
}

} // namespace

TEST_CASE("backends agree on representing matrices") {
    const auto sym = symbolic_context();
    for (const Rational& q0 : {Rational(2), Rational(5, 2), Rational(-3)}) {
        const auto num = numeric_context(q0);
        for (long d : {0L, 1L, 4L})
            for (Space s : kSpaces)
                for (BasisId b : all_bases())
                    for (Gen g : kGenerators)
                        CHECK(eval_matrix(rep(sym, s, b, g, d), q0) == rep(num, s, b, g, d));
    }
}

TEST_CASE("backends agree on canonical families") {
    const auto sym = symbolic_context();
    const Rational q0(3);
    const auto num = numeric_context(q0);
    for (long d : {0L, 2L, 5L})
        for (FamilyBase fb : {FamilyBase::K, FamilyBase::Z, FamilyBase::E, FamilyBase::N,
                              FamilyBase::T, FamilyBase::P})
            for (bool t : {false, true})
                for (bool qi : {false, true})
                    for (bool zc : {false, true}) {
                        CanonicalFamily fam{fb, t, qi, zc};
                        CHECK(eval_matrix(build_canonical(sym, fam, d), q0) ==
                              build_canonical(num, fam, d));
                    }
}

TEST_CASE("backends agree on the module model") {
    const auto sym = symbolic_context();
    const Rational q0(2);
    const auto num = numeric_context(q0);
    const long d = 3;

    FreeScalars<RingScalar> fsym;
    fsym.xy = RingScalar(Rational(2));
    fsym.zy = RingScalar(Rational(-1, 3));
    FreeScalars<Rational> fnum;
    fnum.xy = Rational(2);
    fnum.zy = Rational(-1, 3);

    auto ssym = make_spec(sym, d, fsym);
    auto snum = make_spec(num, d, fnum);

    for (Space sp : kSpaces) {
        for (Axis a : kAxes) {
            auto es = ssym.eta_coords(sp, a);
            auto en = snum.eta_coords(sp, a);
            for (size_t i = 0; i < es.size(); ++i) CHECK(es[i].eval_at(q0) == en[i]);
        }
        for (BasisId b : all_bases())
            CHECK(eval_matrix(basis_matrix(ssym, sp, b), q0) == basis_matrix(snum, sp, b));
        for (BasisId from : all_bases())
            for (BasisId to : all_bases())
                CHECK(eval_matrix(transition(ssym, sp, from, to), q0) ==
                      transition(snum, sp, from, to));
    }
    for (BasisId b : all_bases())
        CHECK(eval_matrix(gram(ssym, b, b.dual()), q0) == gram(snum, b, b.dual()));
}

TEST_CASE("composing two different tabulated paths gives the same transition") {
    // [x]row -> [x]inv_row -> [z]row (inversion then lower-triangular) against
    // [x]row -> [y]row -> [z]row (two rotations): independent tabulated routes
    // to the same change of coordinates.
    const auto sym = symbolic_context();
    for (long d : {1L, 3L}) {
        auto spec = make_spec(sym, d);
        const BasisId xr{Axis::x, false, Flavor::row}, yr{Axis::y, false, Flavor::row},
            zr{Axis::z, false, Flavor::row}, xir{Axis::x, true, Flavor::row};
        for (Space s : kSpaces) {
            auto via_inv = tabulated_transition(spec, s, xr, xir)->matrix *
                           tabulated_transition(spec, s, xir, zr)->matrix;
            auto via_rot = tabulated_transition(spec, s, xr, yr)->matrix *
                           tabulated_transition(spec, s, yr, zr)->matrix;
            CHECK(via_inv == via_rot);
            CHECK(via_inv == transition(spec, s, xr, zr));
        }
    }
}
