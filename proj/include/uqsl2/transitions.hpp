#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "uqsl2/canonical.hpp"
#include "uqsl2/ids.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/module_model.hpp"

namespace uqsl2 {

/// One tabulated change-of-basis edge. Columns of `matrix` express the `to`
/// basis in the `from` basis: v_j = sum_i S_ij u_i.
template <class S>
struct TransitionEdge {
    Space space;
    BasisId from, to;
    ExactMatrix<S> matrix;
    std::string provenance; // inversion | diagonal | lower-triangular | rotation
};

namespace detail {

/// The diagonal row<->col edges. On V* the same formulas apply with q -> q^-1
/// and the pairing arguments swapped; `pairing` already encodes the swap.
template <class S, class Pair>
ExactMatrix<S> diagonal_edge(const QContext<S>& qc, long d, Axis xi, bool inverted,
                             Flavor from_flavor, Pair&& pairing) {
    const Axis a = next(xi), c = next2(xi);
    ExactMatrix<S> m(d + 1, d + 1);
    for (long i = 0; i <= d; ++i) {
        const long k = inverted ? d - i : i;
        S entry;
        if (from_flavor == Flavor::row) {
            entry = qc.sign_pow(k) * qc.q_pow(k * (1 - d)) / qc.q_binom(d, i) *
                    pairing(a, c) / (pairing(a, xi) * pairing(xi, c));
        } else {
            entry = qc.sign_pow(k) * qc.q_pow(k * (d - 1)) * qc.q_binom(d, i) *
                    pairing(a, xi) * pairing(xi, c) / pairing(a, c);
        }
        m.at(i, i) = entry;
    }
    return m;
}

/// The lower-triangular edges: [xi]_row -> [next]inv_row, [xi]_col -> [next]inv_col,
/// [xi]inv_row -> [nextnext]_row, [xi]inv_col -> [nextnext]_col.
template <class S, class Pair>
ExactMatrix<S> lower_triangular_edge(const QContext<S>& qc, long d, Axis xi,
                                     bool from_inverted, Flavor flavor, Pair&& pairing) {
    const Axis a = next(xi), c = next2(xi);
    ExactMatrix<S> m(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= i; ++j) {
            S entry;
            if (!from_inverted && flavor == Flavor::row) {
                entry = qc.sign_pow(j) * qc.q_pow(j * (1 - i)) * qc.q_binom(i, j) *
                        pairing(a, c) / pairing(xi, c);
            } else if (!from_inverted && flavor == Flavor::col) {
                entry = qc.sign_pow(d - i) * qc.q_pow((i - d) * (d - j - 1)) *
                        qc.q_binom(d - j, i - j) * pairing(c, xi) / pairing(c, a);
            } else if (from_inverted && flavor == Flavor::row) {
                entry = qc.sign_pow(j) * qc.q_pow(j * (i - 1)) * qc.q_binom(i, j) *
                        pairing(c, a) / pairing(xi, a);
            } else {
                entry = qc.sign_pow(d - i) * qc.q_pow((d - i) * (d - j - 1)) *
                        qc.q_binom(d - j, i - j) * pairing(a, xi) / pairing(a, c);
            }
            m.at(i, j) = entry;
        }
    return m;
}

/// The rotation edges [xi]_f -> [next(xi)]_f: a scalar multiple of the
/// flavor-matched P-variant.
template <class S, class Pair>
ExactMatrix<S> rotation_edge(const QContext<S>& qc, long d, Axis xi, bool inverted,
                             Flavor flavor, Pair&& pairing) {
    const Axis a = next(xi), c = next2(xi);
    CanonicalFamily fam{FamilyBase::P, flavor == Flavor::col, false, inverted};
    ExactMatrix<S> p = build_canonical(qc, fam, d);
    S scale = (flavor == Flavor::row) ? pairing(a, c) / pairing(xi, c)
                                      : pairing(c, xi) / pairing(c, a);
    return scale * p;
}

} // namespace detail

/// The tabulated transition matrix for (from, to) if the pair is one of the
/// 48 tabulated edges of the space, together with its provenance.
template <class S>
std::optional<TransitionEdge<S>> tabulated_transition(const ModuleSpec<S>& spec,
                                                      Space s, BasisId from, BasisId to) {
    const long d = spec.d();
    const QContext<S> qc = spec.ctx_for(s);
    auto pairing = [&](Axis u, Axis v) -> S {
        return s == Space::V ? spec.pairing(u, v) : spec.pairing(v, u);
    };
    TransitionEdge<S> e{s, from, to, ExactMatrix<S>(0, 0), ""};

    if (to == from.flipped()) {
        e.matrix = base_family_matrix(qc, FamilyBase::Z, d);
        e.provenance = "inversion";
        return e;
    }
    if (to.axis == from.axis && to.inverted == from.inverted && to.flavor != from.flavor) {
        e.matrix = detail::diagonal_edge(qc, d, from.axis, from.inverted, from.flavor, pairing);
        e.provenance = "diagonal";
        return e;
    }
    const Axis lt_target_axis = from.inverted ? next2(from.axis) : next(from.axis);
    if (to.axis == lt_target_axis && to.flavor == from.flavor && to.inverted != from.inverted) {
        e.matrix = detail::lower_triangular_edge(qc, d, from.axis, from.inverted,
                                                 from.flavor, pairing);
        e.provenance = "lower-triangular";
        return e;
    }
    if (to.axis == next(from.axis) && to.flavor == from.flavor && to.inverted == from.inverted) {
        e.matrix = detail::rotation_edge(qc, d, from.axis, from.inverted, from.flavor, pairing);
        e.provenance = "rotation";
        return e;
    }
    return std::nullopt;
}

/// All 48 tabulated edges of a space.
template <class S>
std::vector<TransitionEdge<S>> tabulated_edges(const ModuleSpec<S>& spec, Space s) {
    std::vector<TransitionEdge<S>> edges;
    for (BasisId from : all_bases())
        for (BasisId to : all_bases()) {
            if (to == from) continue;
            if (auto e = tabulated_transition(spec, s, from, to)) edges.push_back(*e);
        }
    return edges;
}

/// Transition matrix between any two of the twelve bases: a tabulated edge
/// when one exists, otherwise the composition along a breadth-first shortest
/// path through tabulated edges. Path independence is a verified property of
/// the tables, not re-checked per call.
template <class S>
ExactMatrix<S> transition(const ModuleSpec<S>& spec, Space s, BasisId from, BasisId to) {
    if (from == to) return ExactMatrix<S>::identity(spec.dim());
    if (auto e = tabulated_transition(spec, s, from, to)) return e->matrix;

    const auto bases = all_bases();
    std::vector<int> prev(bases.size(), -1);
    std::vector<bool> seen(bases.size(), false);
    std::deque<int> queue{from.index()};
    seen[from.index()] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to.index()) break;
        for (const BasisId& v : bases) {
            if (seen[v.index()]) continue;
            if (tabulated_transition(spec, s, bases[u], v)) {
                seen[v.index()] = true;
                prev[v.index()] = u;
                queue.push_back(v.index());
            }
        }
    }
    if (!seen[to.index()])
        throw ConsistencyError("transition graph is not connected");
    std::vector<int> path{to.index()};
    while (path.back() != from.index()) path.push_back(prev[path.back()]);
    ExactMatrix<S> m = ExactMatrix<S>::identity(spec.dim());
    for (size_t k = path.size() - 1; k > 0; --k) {
        auto e = tabulated_transition(spec, s, bases[path[k]], bases[path[k - 1]]);
        m = m * e->matrix; // transition composition: (u->v)(v->w) = u->w
    }
    return m;
}

/// Independent oracle: the change of coordinates between two closed-form
/// bases, solved from their coordinate matrices.
template <class S>
ExactMatrix<S> transition_from_bases(const ModuleSpec<S>& spec, Space s, BasisId from,
                                     BasisId to) {
    return basis_matrix(spec, s, from).inverse() * basis_matrix(spec, s, to);
}

template <class S>
struct RotatorRep {
    Space space;
    BasisId basis;
    ExactMatrix<S> matrix;
};

/// Matrix of the canonical rotator (the one represented by P_q with respect
/// to every plain row basis) in the given basis: P, P^t, ZPZ or ZP^tZ by
/// flavor, at q^-1 on V*.
template <class S>
RotatorRep<S> rotator_rep(const ModuleSpec<S>& spec, Space s, BasisId b) {
    CanonicalFamily fam{FamilyBase::P, b.flavor == Flavor::col, s == Space::V_dual,
                        b.inverted};
    return {s, b, build_canonical(spec.ctx(), fam, spec.d())};
}

} // namespace uqsl2
