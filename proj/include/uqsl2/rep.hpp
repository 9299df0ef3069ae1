#pragma once

#include "uqsl2/canonical.hpp"
#include "uqsl2/ids.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/qcontext.hpp"
#include "uqsl2/report.hpp"

namespace uqsl2 {

/// One cell of the representation tables: a canonical family member and a sign.
struct RepEntry {
    CanonicalFamily fam;
    bool negated = false;
};

namespace detail {

inline CanonicalFamily cf(FamilyBase b, bool t = false, bool qi = false, bool zc = false) {
    return CanonicalFamily{b, t, qi, zc};
}

/// Matrices representing x, y, z on V with respect to the twelve bases.
inline RepEntry vmat_entry(BasisId b, Gen g) {
    using FB = FamilyBase;
    const int col = g == Gen::x ? 0 : (g == Gen::y ? 1 : 2);
    const int row = b.index();
    // Rows in basis order: [x]row,[x]col,[x]inv_row,[x]inv_col, then y, z.
    static const CanonicalFamily table[12][3] = {
        {cf(FB::K), cf(FB::E, false, true, true), cf(FB::E)},
        {cf(FB::K), cf(FB::E, true), cf(FB::E, true, true, true)},
        {cf(FB::K, false, true), cf(FB::E, false, true), cf(FB::E, false, false, true)},
        {cf(FB::K, false, true), cf(FB::E, true, false, true), cf(FB::E, true, true)},

        {cf(FB::E), cf(FB::K), cf(FB::E, false, true, true)},
        {cf(FB::E, true, true, true), cf(FB::K), cf(FB::E, true)},
        {cf(FB::E, false, false, true), cf(FB::K, false, true), cf(FB::E, false, true)},
        {cf(FB::E, true, true), cf(FB::K, false, true), cf(FB::E, true, false, true)},

        {cf(FB::E, false, true, true), cf(FB::E), cf(FB::K)},
        {cf(FB::E, true), cf(FB::E, true, true, true), cf(FB::K)},
        {cf(FB::E, false, true), cf(FB::E, false, false, true), cf(FB::K, false, true)},
        {cf(FB::E, true, false, true), cf(FB::E, true, true), cf(FB::K, false, true)},
    };
    return {table[row][col], false};
}

/// Matrices representing n_x, n_y, n_z on V with respect to the twelve bases.
inline RepEntry nmat_entry(BasisId b, Gen g) {
    using FB = FamilyBase;
    const int col = g == Gen::n_x ? 0 : (g == Gen::n_y ? 1 : 2);
    const int row = b.index();
    struct Cell { CanonicalFamily fam; bool neg; };
    static const Cell table[12][3] = {
        {{cf(FB::T), false}, {cf(FB::N, false, true, true), true}, {cf(FB::N), false}},
        {{cf(FB::T, true), false}, {cf(FB::N, true), false}, {cf(FB::N, true, true, true), true}},
        {{cf(FB::T, false, true), true}, {cf(FB::N, false, true), true}, {cf(FB::N, false, false, true), false}},
        {{cf(FB::T, true, true), true}, {cf(FB::N, true, false, true), false}, {cf(FB::N, true, true), true}},

        {{cf(FB::N), false}, {cf(FB::T), false}, {cf(FB::N, false, true, true), true}},
        {{cf(FB::N, true, true, true), true}, {cf(FB::T, true), false}, {cf(FB::N, true), false}},
        {{cf(FB::N, false, false, true), false}, {cf(FB::T, false, true), true}, {cf(FB::N, false, true), true}},
        {{cf(FB::N, true, true), true}, {cf(FB::T, true, true), true}, {cf(FB::N, true, false, true), false}},

        {{cf(FB::N, false, true, true), true}, {cf(FB::N), false}, {cf(FB::T), false}},
        {{cf(FB::N, true), false}, {cf(FB::N, true, true, true), true}, {cf(FB::T, true), false}},
        {{cf(FB::N, false, true), true}, {cf(FB::N, false, false, true), false}, {cf(FB::T, false, true), true}},
        {{cf(FB::N, true, false, true), false}, {cf(FB::N, true, true), true}, {cf(FB::T, true, true), true}},
    };
    const Cell& c = table[row][col];
    return {c.fam, c.neg};
}

} // namespace detail

/// The table cell for generator g on V with respect to basis b. y^-1 has no
/// table entry; it is materialized by exact inversion of rep(y).
inline RepEntry rep_entry(BasisId b, Gen g) {
    switch (g) {
        case Gen::x:
        case Gen::y:
        case Gen::z:
            return detail::vmat_entry(b, g);
        case Gen::n_x:
        case Gen::n_y:
        case Gen::n_z:
            return detail::nmat_entry(b, g);
        default:
            throw ParameterError("y^-1 has no table entry");
    }
}

/// Matrix representing generator g on the given space with respect to basis b.
/// The V* tables are the V tables at q^-1.
template <class S>
ExactMatrix<S> rep(const QContext<S>& ctx, Space s, BasisId b, Gen g, long d) {
    if (s == Space::V_dual) return rep(ctx.inverted(), Space::V, b, g, d);
    if (g == Gen::y_inv) return rep(ctx, s, b, Gen::y, d).inverse();
    RepEntry e = rep_entry(b, g);
    ExactMatrix<S> m = build_canonical(ctx, e.fam, d);
    return e.negated ? -m : m;
}

/// The defining relations checked against the representing matrices in one
/// basis: q-twisted for V* (the module structure there lives at q^-1).
/// Covers the three equitable relations, y y^-1 = 1, the six two-sided
/// q-commutation relations, both reconstructions of x and z from n_x, y^-1,
/// n_z, both closed forms of each n-generator, and nilpotency n^{d+1} = 0.
template <class S>
Report verify_algebra(const QContext<S>& ctx, Space s, BasisId b, long d) {
    Report rep_out;
    const QContext<S> c = (s == Space::V) ? ctx : ctx.inverted();
    const S q = c.q, qi = c.q_pow(-1);
    const S q2 = q * q, qi2 = qi * qi;
    const S delta = q - qi; // nonzero: q^2 != 1

    const auto X = rep(ctx, s, b, Gen::x, d);
    const auto Y = rep(ctx, s, b, Gen::y, d);
    const auto Yi = rep(ctx, s, b, Gen::y_inv, d);
    const auto Z = rep(ctx, s, b, Gen::z, d);
    const auto Nx = rep(ctx, s, b, Gen::n_x, d);
    const auto Ny = rep(ctx, s, b, Gen::n_y, d);
    const auto Nz = rep(ctx, s, b, Gen::n_z, d);
    const auto I = ExactMatrix<S>::identity(static_cast<size_t>(d + 1));

    const std::string tag = std::string(space_name(s)) + ":" + b.str();
    auto named = [&](const char* n) { return std::string(n) + " @ " + tag; };

    rep_out.check_equal(named("y*y^-1 = 1"), Y * Yi, I);

    auto equitable = [&](const char* n, const ExactMatrix<S>& A, const ExactMatrix<S>& B) {
        rep_out.check_equal(named(n), (q * (A * B) - qi * (B * A)), delta * I);
    };
    equitable("equitable xy", X, Y);
    equitable("equitable yz", Y, Z);
    equitable("equitable zx", Z, X);

    auto comm = [&](const char* n, const ExactMatrix<S>& A, const ExactMatrix<S>& B,
                    const S& factor) {
        rep_out.check_equal(named(n), A * B, factor * (B * A));
    };
    comm("x n_y = q^2 n_y x", X, Ny, q2);
    comm("x n_z = q^-2 n_z x", X, Nz, qi2);
    comm("y n_z = q^2 n_z y", Y, Nz, q2);
    comm("y n_x = q^-2 n_x y", Y, Nx, qi2);
    comm("z n_x = q^2 n_x z", Z, Nx, q2);
    comm("z n_y = q^-2 n_y z", Z, Ny, qi2);

    rep_out.check_equal(named("x = y^-1 - q^-1(q-q^-1) n_z y^-1"), X,
                        Yi - (qi * delta) * (Nz * Yi));
    rep_out.check_equal(named("z = y^-1 - q(q-q^-1) n_x y^-1"), Z,
                        Yi - (q * delta) * (Nx * Yi));

    auto ndef = [&](const char* n1, const char* n2, const ExactMatrix<S>& Ng,
                    const ExactMatrix<S>& A, const ExactMatrix<S>& B) {
        rep_out.check_equal(named(n1), delta * Ng, q * (I - A * B));
        rep_out.check_equal(named(n2), delta * Ng, qi * (I - B * A));
    };
    ndef("n_x = q(1-yz)/(q-q^-1)", "n_x = q^-1(1-zy)/(q-q^-1)", Nx, Y, Z);
    ndef("n_y = q(1-zx)/(q-q^-1)", "n_y = q^-1(1-xz)/(q-q^-1)", Ny, Z, X);
    ndef("n_z = q(1-xy)/(q-q^-1)", "n_z = q^-1(1-yx)/(q-q^-1)", Nz, X, Y);

    rep_out.check_zero(named("n_x^{d+1} = 0"), Nx.pow(static_cast<size_t>(d + 1)));
    rep_out.check_zero(named("n_y^{d+1} = 0"), Ny.pow(static_cast<size_t>(d + 1)));
    rep_out.check_zero(named("n_z^{d+1} = 0"), Nz.pow(static_cast<size_t>(d + 1)));

    return rep_out;
}

/// The transpose of the matrix of g on V in basis b represents the image of g
/// under the antiisomorphism (x,y,z fixed, each n negated) on V* with respect
/// to the dual basis.
template <class S>
Report dagger_transpose_check(const QContext<S>& ctx, BasisId b, long d) {
    Report out;
    const BasisId bd = b.dual();
    for (Gen g : kGenerators) {
        bool flip = (g == Gen::n_x || g == Gen::n_y || g == Gen::n_z);
        auto lhs = rep(ctx, Space::V, b, g, d).transpose();
        auto rhs = rep(ctx, Space::V_dual, bd, g, d);
        if (flip) rhs = -rhs;
        out.check_equal(std::string("dagger transpose ") + gen_name(g) + " @ " +
                            b.str() + " -> " + bd.str(),
                        lhs, rhs);
    }
    return out;
}

} // namespace uqsl2
