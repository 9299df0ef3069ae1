#pragma once

#include "uqsl2/ids.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/qcontext.hpp"

namespace uqsl2 {

/// The canonical (d+1)x(d+1) matrix families.
///
///   K_q: diagonal, (i,i) = q^{d-2i}.
///   Z:   (i,j) = 1 iff i+j = d; Z^2 = I.
///   E_q: upper bidiagonal, (i,i) = q^{2i-d}, (i-1,i) = q^d - q^{2i-2-d}.
///   N_q: (i,i-1) = q^{1-i}[i], all else zero.
///   T_q: tridiagonal, (i,i-1) = q^{3i-2d-1}[i],
///        (i-1,i) = -q^{3i-d-2}[d-i+1],
///        (i,i)   = q^{2i-d}[i][d-i+1](q - q^-1) - q^{2i-d+1}[2i-d].
///   P_q: (i,j) = 0 for i+j < d, else (-1)^{d-j} q^{(d-j)(1-i)} binom(i, d-j).
template <class S>
ExactMatrix<S> base_family_matrix(const QContext<S>& ctx, FamilyBase base, long d) {
    if (d < 0) throw ParameterError("dimension parameter d must be >= 0");
    const size_t n = static_cast<size_t>(d + 1);
    ExactMatrix<S> m(n, n);
    switch (base) {
        case FamilyBase::K:
            for (long i = 0; i <= d; ++i) m.at(i, i) = ctx.q_pow(d - 2 * i);
            break;
        case FamilyBase::Z:
            for (long i = 0; i <= d; ++i) m.at(i, d - i) = S(1);
            break;
        case FamilyBase::E:
            for (long i = 0; i <= d; ++i) m.at(i, i) = ctx.q_pow(2 * i - d);
            for (long i = 1; i <= d; ++i)
                m.at(i - 1, i) = ctx.q_pow(d) - ctx.q_pow(2 * i - 2 - d);
            break;
        case FamilyBase::N:
            for (long i = 1; i <= d; ++i)
                m.at(i, i - 1) = ctx.q_pow(1 - i) * ctx.q_int(i);
            break;
        case FamilyBase::T: {
            const S qmqi = ctx.q_pow(1) - ctx.q_pow(-1);
            for (long i = 1; i <= d; ++i) {
                m.at(i, i - 1) = ctx.q_pow(3 * i - 2 * d - 1) * ctx.q_int(i);
                m.at(i - 1, i) = S(0) - ctx.q_pow(3 * i - d - 2) * ctx.q_int(d - i + 1);
            }
            for (long i = 0; i <= d; ++i)
                m.at(i, i) = ctx.q_pow(2 * i - d) * ctx.q_int(i) * ctx.q_int(d - i + 1) * qmqi -
                             ctx.q_pow(2 * i - d + 1) * ctx.q_int(2 * i - d);
            break;
        }
        case FamilyBase::P:
            for (long i = 0; i <= d; ++i)
                for (long j = 0; j <= d; ++j) {
                    if (i + j < d) continue;
                    m.at(i, j) = ctx.sign_pow(d - j) * ctx.q_pow((d - j) * (1 - i)) *
                                 ctx.q_binom(i, d - j);
                }
            break;
    }
    return m;
}

/// Family member with modifiers applied. The three modifier maps commute, so
/// the application order is immaterial; q-inversion, then transpose, then
/// Z-conjugation is used.
template <class S>
ExactMatrix<S> build_canonical(const QContext<S>& ctx, const CanonicalFamily& f, long d) {
    ExactMatrix<S> m =
        base_family_matrix(f.q_inverted ? ctx.inverted() : ctx, f.base, d);
    if (f.transposed) m = m.transpose();
    if (f.z_conjugated) m = m.z_conjugate();
    return m;
}

} // namespace uqsl2
