#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqsl2/matrix.hpp"
#include "uqsl2/report.hpp"
#include "uqsl2/ring_scalar.hpp"
#include "uqsl2/subspace.hpp"

namespace uqsl2 {

/// A triple of matrices in the diagonal / lower-bidiagonal / upper-bidiagonal
/// shape pattern (the "basis 1" pattern).
template <class S>
struct ShapeTriple {
    long d = 0;
    ExactMatrix<S> X, Y, Z;
};

template <class S>
void validate_shape(const ShapeTriple<S>& t) {
    const size_t n = static_cast<size_t>(t.d + 1);
    if (t.d < 0) throw ShapeError("triple dimension parameter d must be >= 0");
    for (const auto* m : {&t.X, &t.Y, &t.Z})
        if (m->rows() != n || m->cols() != n)
            throw ShapeError("triple matrices must be " + std::to_string(n) + "x" +
                             std::to_string(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && !t.X.at(i, j).is_zero())
                throw ShapeError("X must be diagonal");
            if (!t.Y.at(i, j).is_zero() && !(i == j || i == j + 1))
                throw ShapeError("Y must be lower bidiagonal");
            if (!t.Z.at(i, j).is_zero() && !(i == j || j == i + 1))
                throw ShapeError("Z must be upper bidiagonal");
        }
    for (size_t i = 1; i < n; ++i) {
        if (t.Y.at(i, i - 1).is_zero())
            throw ShapeError("Y subdiagonal entries must be nonzero");
        if (t.Z.at(i - 1, i).is_zero())
            throw ShapeError("Z superdiagonal entries must be nonzero");
    }
}

/// Ratio b of consecutive differences of a sequence, when the differences
/// form a geometric progression. Adjacent entries must differ; inconsistent
/// ratios raise. Sequences of length <= 2 impose no ratio and return nullopt.
template <class S>
std::optional<S> detect_b(const std::vector<S>& seq) {
    if (seq.empty()) throw ParameterError("detect_b needs a nonempty sequence");
    const long d = static_cast<long>(seq.size()) - 1;
    for (long i = 1; i <= d; ++i)
        if (seq[i - 1] == seq[i])
            throw RecognitionError("sequence is not b-recurrent: entries " +
                                   std::to_string(i - 1) + " and " + std::to_string(i) +
                                   " coincide");
    if (d <= 1) return std::nullopt;
    S b = (seq[1] - seq[2]) / (seq[0] - seq[1]);
    for (long i = 2; i <= d - 1; ++i) {
        S r = (seq[i] - seq[i + 1]) / (seq[i - 1] - seq[i]);
        if (!(r == b))
            throw RecognitionError("sequence is not b-recurrent: difference ratios disagree");
    }
    if (b.is_zero()) throw RecognitionError("sequence recurrence ratio is zero");
    return b;
}

enum class Branch { quantum, classical_sl2, underdetermined };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::quantum: return "quantum";
        case Branch::classical_sl2: return "classical_sl2";
        default: return "underdetermined";
    }
}

template <class S>
struct RecognitionResult {
    Branch branch = Branch::underdetermined;
    std::optional<S> b, q;
    ExactMatrix<S> X, Y, Z; // normalized triple (input triple when underdetermined)
    Report certificate;
    bool y_diag_reversed = false; // diagonal runs opposite to the canonical order
    bool z_diag_reversed = false;
};

namespace detail {

/// Affine map alpha -> (alpha - a1)/a2 sending the observed diagonal onto the
/// target; solved from the first two entries, verified on the rest.
template <class S>
ExactMatrix<S> affine_normalize(const ExactMatrix<S>& m, const std::vector<S>& target,
                                const char* which) {
    const size_t n = m.rows();
    if (n == 1)
        throw ConsistencyError("affine normalization underdetermined at d=0");
    auto diag = m.diagonal_entries();
    if (target[0] == target[1])
        throw ConsistencyError("degenerate normalization target");
    S a2 = (diag[0] - diag[1]) / (target[0] - target[1]);
    if (a2.is_zero())
        throw RecognitionError(std::string(which) + ": constant diagonal cannot be normalized");
    S a1 = diag[0] - a2 * target[0];
    for (size_t i = 0; i < n; ++i)
        if (!((diag[i] - a1) / a2 == target[i]))
            throw RecognitionError(std::string(which) +
                                   ": diagonal does not match the required eigenvalue order");
    ExactMatrix<S> out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            S v = m.at(i, j);
            if (i == j) v = v - a1;
            out.at(i, j) = v / a2;
        }
    return out;
}

template <class S>
void certify_equitable(Report& rep, const S& q, const ExactMatrix<S>& X,
                       const ExactMatrix<S>& Y, const ExactMatrix<S>& Z) {
    const S qi = S(1) / q;
    const S delta = q - qi;
    const auto I = ExactMatrix<S>::identity(X.rows());
    rep.check_equal("(q*XY - q^-1*YX)/(q - q^-1) = 1", q * (X * Y) - qi * (Y * X), delta * I);
    rep.check_equal("(q*YZ - q^-1*ZY)/(q - q^-1) = 1", q * (Y * Z) - qi * (Z * Y), delta * I);
    rep.check_equal("(q*ZX - q^-1*XZ)/(q - q^-1) = 1", q * (Z * X) - qi * (X * Z), delta * I);
}

template <class S>
void certify_sl2(Report& rep, const ExactMatrix<S>& X, const ExactMatrix<S>& Y,
                 const ExactMatrix<S>& Z) {
    const S two(2);
    rep.check_equal("[X,Y] = 2X + 2Y", X * Y - Y * X, two * X + two * Y);
    rep.check_equal("[Y,Z] = 2Y + 2Z", Y * Z - Z * Y, two * Y + two * Z);
    rep.check_equal("[Z,X] = 2Z + 2X", Z * X - X * Z, two * Z + two * X);
}

} // namespace detail

/// Recognize a shape triple: detect the common recurrence ratio b of the
/// three diagonal sequences (each read directly off its matrix, accepting the
/// reversed orientation b^-1), recover q with q^-2 = b (quantum) or identify
/// the classical case (b = 1), affine-normalize each diagonal to its
/// canonical eigenvalue order, and certify the defining relations.
///
/// Hints: b_hint supplies b when d <= 1 leaves it indeterminate; q_hint
/// supplies q when b^-1 has no square root in the working field.
template <class S>
RecognitionResult<S> recognize_triple(const ShapeTriple<S>& t,
                                      std::optional<S> q_hint = std::nullopt,
                                      std::optional<S> b_hint = std::nullopt) {
    validate_shape(t);
    const long d = t.d;
    RecognitionResult<S> res;
    res.X = t.X;
    res.Y = t.Y;
    res.Z = t.Z;

    auto bx = detect_b(t.X.diagonal_entries());
    auto by = detect_b(t.Y.diagonal_entries());
    auto bz = detect_b(t.Z.diagonal_entries());

    std::optional<S> b = bx;
    if (!b) {
        // d <= 1: no ratio constraint exists; use hints or surface it.
        if (b_hint) b = b_hint;
        else if (q_hint) b = S(1) / (*q_hint * *q_hint);
        if (!b || d == 0) {
            res.branch = Branch::underdetermined;
            return res;
        }
    } else {
        S binv = S(1) / *b;
        if (by && !(*by == *b) && !(*by == binv))
            throw RecognitionError("Y diagonal recurrence ratio matches neither b nor b^-1");
        if (bz && !(*bz == *b) && !(*bz == binv))
            throw RecognitionError("Z diagonal recurrence ratio matches neither b nor b^-1");
        if (b_hint && !(*b_hint == *b))
            throw RecognitionError("b hint contradicts the detected recurrence ratio " +
                                   b->str());
    }
    if (b->is_zero()) throw RecognitionError("recurrence ratio b must be nonzero");
    res.b = b;

    const size_t n = static_cast<size_t>(d + 1);
    if (*b == S(1)) {
        // Classical branch: X normalizes to 2i-d; the brackets then force the
        // bidiagonal diagonals to d-2i.
        std::vector<S> tx(n), ty(n);
        for (long i = 0; i <= d; ++i) {
            tx[i] = S(2 * i - d);
            ty[i] = S(d - 2 * i);
        }
        res.branch = Branch::classical_sl2;
        res.X = detail::affine_normalize(t.X, tx, "X");
        res.Y = detail::affine_normalize(t.Y, ty, "Y");
        res.Z = detail::affine_normalize(t.Z, ty, "Z");
        detail::certify_sl2(res.certificate, res.X, res.Y, res.Z);
    } else {
        S q;
        if (q_hint) {
            q = *q_hint;
            if (q.is_zero() || q * q == S(1))
                throw ParameterError("q hint must avoid 0 and q^2 = 1");
            if (!(S(1) / (q * q) == *b))
                throw RecognitionError("q hint does not satisfy q^-2 = b");
        } else {
            auto root = sqrt_exact_scalar(S(1) / *b);
            if (!root)
                throw NeedsHintError("b^-1 = " + (S(1) / *b).str() +
                                     " has no square root in the working field; supply q");
            q = *root;
        }
        res.q = q;
        res.branch = Branch::quantum;

        // Canonical diagonal orders: X runs q^{d-2i}; the bidiagonal matrices
        // run q^{2i-d} unless their own recurrence says they are reversed.
        auto q_pow = [&q](long e) {
            S p(1);
            for (long k = 0; k < (e >= 0 ? e : -e); ++k) p *= q;
            return e >= 0 ? p : S(1) / p;
        };
        std::vector<S> desc(n), asc(n);
        for (long i = 0; i <= d; ++i) {
            desc[i] = q_pow(d - 2 * i);
            asc[i] = q_pow(2 * i - d);
        }
        res.y_diag_reversed = by.has_value() && (*by == *b);
        res.z_diag_reversed = bz.has_value() && (*bz == *b);
        res.X = detail::affine_normalize(t.X, desc, "X");
        res.Y = detail::affine_normalize(t.Y, res.y_diag_reversed ? desc : asc, "Y");
        res.Z = detail::affine_normalize(t.Z, res.z_diag_reversed ? desc : asc, "Z");
        detail::certify_equitable(res.certificate, q, res.X, res.Y, res.Z);
    }
    if (!res.certificate.all_pass()) {
        std::string first;
        for (auto& c : res.certificate.checks)
            if (!c.pass) {
                first = c.name + " (" + c.detail + ")";
                break;
            }
        throw NotAModuleError("normalized triple fails the relations: " + first);
    }
    return res;
}

/// True iff no proper nonzero subspace is invariant under every generator.
/// Two exact certificates are combined: the orbit closure of each standard
/// coordinate vector must be the full space, and the unital algebra spanned
/// by words in the generators must be the full matrix algebra.
template <class S>
bool irreducibility_certificate(const std::vector<ExactMatrix<S>>& gens) {
    if (gens.empty()) throw ParameterError("irreducibility needs at least one matrix");
    const size_t n = gens[0].rows();
    for (auto& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw ShapeError("generators must be square of equal size");
    if (n == 1) return true;

    for (size_t start = 0; start < n; ++start) {
        Subspace<S> w = Subspace<S>::span_of(unit_vector<S>(n, start));
        size_t dim = w.dim();
        while (true) {
            for (auto& g : gens) w = w.sum(w.image_under(g));
            if (w.dim() == dim) break;
            dim = w.dim();
        }
        if (dim < n) return false;
    }

    // Word span: right-multiplying by generators reaches every word from I.
    auto vec_of = [n](const ExactMatrix<S>& m) {
        std::vector<S> v(n * n, S(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = m.at(i, j);
        return v;
    };
    std::vector<ExactMatrix<S>> basis{ExactMatrix<S>::identity(n)};
    Subspace<S> span = Subspace<S>::span_of(vec_of(basis[0]));
    for (size_t head = 0; head < basis.size(); ++head) {
        if (span.dim() == n * n) break;
        for (auto& g : gens) {
            ExactMatrix<S> w = basis[head] * g;
            auto v = vec_of(w);
            if (!span.contains_vector(v)) {
                span = span.sum(Subspace<S>::span_of(v));
                basis.push_back(std::move(w));
            }
        }
    }
    return span.dim() == n * n;
}

template <class S>
bool irreducibility_certificate(const ExactMatrix<S>& X, const ExactMatrix<S>& Y,
                                const ExactMatrix<S>& Z) {
    return irreducibility_certificate(std::vector<ExactMatrix<S>>{X, Y, Z});
}

/// Generator set extended with the nilpotent combinations n_x, n_y, n_z built
/// from a certified quantum triple.
template <class S>
std::vector<ExactMatrix<S>> with_nilpotent_combinations(const S& q, const ExactMatrix<S>& X,
                                                        const ExactMatrix<S>& Y,
                                                        const ExactMatrix<S>& Z) {
    const S qi = S(1) / q;
    const S delta = q - qi;
    const auto I = ExactMatrix<S>::identity(X.rows());
    auto scale = q / delta;
    std::vector<ExactMatrix<S>> gens{X, Y, Z};
    gens.push_back(scale * (I - Y * Z));
    gens.push_back(scale * (I - Z * X));
    gens.push_back(scale * (I - X * Y));
    return gens;
}

} // namespace uqsl2
