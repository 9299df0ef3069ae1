#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "uqsl2/ids.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/qcontext.hpp"
#include "uqsl2/rep.hpp"
#include "uqsl2/subspace.hpp"

namespace uqsl2 {

/// The five freely choosable pairing values, keyed by the CLI names
/// xy* = (eta_x, eta*_y), yz*, zx*, yx*, zy*.
template <class S>
struct FreeScalars {
    S xy{1}, yz{1}, zx{1}, yx{1}, zy{1};
};

template <class S>
struct EtaVector {
    Space space;
    Axis axis;
    std::vector<S> coords;
};

/// Concrete coordinate model of the module pair.
///
/// The reference basis of V is declared to be the normalized [y]_row basis,
/// so x, y, z act by E_q, K_q, ZE_{q^-1}Z and eta_y is the all-ones vector.
/// The reference basis of V* is its pairing-dual, the [y]inv_col basis of V*,
/// making the pairing the standard coordinate dot product. The remaining four
/// eta scales are solved from the five free pairing values; the sixth pairing
/// is derived and asserted.
template <class S>
class ModuleSpec {
public:
    ModuleSpec(QContext<S> ctx, long d, const FreeScalars<S>& free)
        : ctx_(std::move(ctx)), d_(d) {
        if (d < 0) throw ParameterError("dimension parameter d must be >= 0");
        for (const S* s : {&free.xy, &free.yz, &free.zx, &free.yx, &free.zy})
            if (s->is_zero())
                throw ParameterError("free pairing scalars must be nonzero");

        xy_ = free.xy; yz_ = free.yz; zx_ = free.zx; yx_ = free.yx; zy_ = free.zy;
        xz_ = xy_ * yz_ * zx_ * ctx_.sign_pow(d) * ctx_.q_pow(-d * (d - 1)) / (yx_ * zy_);

        solve_eta_scales();
    }

    long d() const { return d_; }
    size_t dim() const { return static_cast<size_t>(d_ + 1); }
    const QContext<S>& ctx() const { return ctx_; }
    QContext<S> ctx_for(Space s) const {
        return s == Space::V ? ctx_ : ctx_.inverted();
    }

    static BasisId reference_basis(Space s) {
        return s == Space::V ? BasisId{Axis::y, false, Flavor::row}
                             : BasisId{Axis::y, true, Flavor::col};
    }

    /// (eta_u, eta*_v) for u != v.
    const S& pairing(Axis u, Axis v) const {
        if (u == Axis::x && v == Axis::y) return xy_;
        if (u == Axis::y && v == Axis::z) return yz_;
        if (u == Axis::z && v == Axis::x) return zx_;
        if (u == Axis::y && v == Axis::x) return yx_;
        if (u == Axis::z && v == Axis::y) return zy_;
        if (u == Axis::x && v == Axis::z) return xz_;
        throw ParameterError("pairing requires distinct axes");
    }
    const S& derived_pairing() const { return xz_; }

    /// Representing matrix of g on space s in the reference coordinates.
    ExactMatrix<S> rep_ref(Space s, Gen g) const {
        return rep(ctx_, s, reference_basis(s), g, d_);
    }

    EtaVector<S> eta(Space s, Axis a) const {
        const auto& store = (s == Space::V) ? eta_ : eta_dual_;
        return {s, a, store[static_cast<size_t>(a)]};
    }

    const std::vector<S>& eta_coords(Space s, Axis a) const {
        const auto& store = (s == Space::V) ? eta_ : eta_dual_;
        return store[static_cast<size_t>(a)];
    }

    /// Evaluation pairing between V and V* in reference coordinates.
    S pair(const std::vector<S>& u, const std::vector<S>& v) const {
        return dot(u, v);
    }

private:
    QContext<S> ctx_;
    long d_;
    S xy_, yz_, zx_, yx_, zy_, xz_;
    std::array<std::vector<S>, 3> eta_, eta_dual_;

    std::vector<S> kernel_direction(Space s, Gen n) const {
        Subspace<S> k = Subspace<S>::kernel(rep_ref(s, n));
        if (k.dim() != 1)
            throw ConsistencyError("nilpotent generator kernel is not a line");
        return k.basis_vector(0);
    }

    void solve_eta_scales() {
        const size_t n = dim();
        std::vector<S> ones(n, S(1));

        std::vector<S> kx = kernel_direction(Space::V, Gen::n_x);
        std::vector<S> kz = kernel_direction(Space::V, Gen::n_z);
        std::vector<S> kxd = kernel_direction(Space::V_dual, Gen::n_x);
        std::vector<S> kyd = kernel_direction(Space::V_dual, Gen::n_y);
        std::vector<S> kzd = kernel_direction(Space::V_dual, Gen::n_z);

        auto nonzero = [](const S& v, const char* what) {
            if (v.is_zero())
                throw ConsistencyError(std::string("vanishing pairing while scaling eta: ") + what);
            return v;
        };

        // Triangular solve for the five unknown scales, eta_y being fixed.
        S alpha = yx_ / nonzero(dot(ones, kxd), "(eta_y, k*_x)");
        S gamma = yz_ / nonzero(dot(ones, kzd), "(eta_y, k*_z)");
        S c = zx_ / nonzero(alpha * dot(kz, kxd), "(eta_z, eta*_x)");
        S beta = zy_ / nonzero(c * dot(kz, kyd), "(eta_z, eta*_y)");
        S a = xy_ / nonzero(beta * dot(kx, kyd), "(eta_x, eta*_y)");

        eta_[static_cast<size_t>(Axis::x)] = scale_vector(a, kx);
        eta_[static_cast<size_t>(Axis::y)] = ones;
        eta_[static_cast<size_t>(Axis::z)] = scale_vector(c, kz);
        eta_dual_[static_cast<size_t>(Axis::x)] = scale_vector(alpha, kxd);
        eta_dual_[static_cast<size_t>(Axis::y)] = scale_vector(beta, kyd);
        eta_dual_[static_cast<size_t>(Axis::z)] = scale_vector(gamma, kzd);

        // The sixth pairing must come out equal to the derived scalar.
        S got = dot(eta_[static_cast<size_t>(Axis::x)],
                    eta_dual_[static_cast<size_t>(Axis::z)]);
        if (!(got == xz_))
            throw ConsistencyError("derived pairing (eta_x, eta*_z) mismatch: got " +
                                   got.str() + ", want " + xz_.str());
    }
};

template <class S>
ModuleSpec<S> make_spec(const QContext<S>& ctx, long d, const FreeScalars<S>& free = {}) {
    return ModuleSpec<S>(ctx, d, free);
}

/// Eigenvalue of xi on component i of the decomposition [xi]:
/// q^{d-2i} on V, q^{2i-d} on V*.
template <class S>
S component_eigenvalue(const ModuleSpec<S>& spec, Space s, long i) {
    long e = spec.d() - 2 * i;
    return spec.ctx().q_pow(s == Space::V ? e : -e);
}

/// The six eigenspace decompositions, as canonical subspaces in reference
/// coordinates. Inverted ids return the reversed sequence.
template <class S>
std::vector<Subspace<S>> decomposition(const ModuleSpec<S>& spec, Space s, DecompId id) {
    const size_t n = spec.dim();
    const auto m = spec.rep_ref(s, gen_of_axis(id.axis));
    std::vector<Subspace<S>> comps;
    comps.reserve(n);
    for (long i = 0; i <= spec.d(); ++i) {
        S lambda = component_eigenvalue(spec, s, i);
        auto shifted = m - lambda * ExactMatrix<S>::identity(n);
        Subspace<S> eig = Subspace<S>::kernel(shifted);
        if (eig.dim() != 1)
            throw ConsistencyError("eigenspace is not one-dimensional");
        comps.push_back(std::move(eig));
    }
    if (id.inverted) std::reverse(comps.begin(), comps.end());
    return comps;
}

/// Flag member i is n_axis^{d-i} applied to the whole space; dimensions
/// increase 1, 2, ..., d+1.
template <class S>
std::vector<Subspace<S>> flag(const ModuleSpec<S>& spec, Space s, Axis axis) {
    const auto m = spec.rep_ref(s, nilpotent_of_axis(axis));
    std::vector<Subspace<S>> members(spec.dim());
    ExactMatrix<S> power = ExactMatrix<S>::identity(spec.dim());
    // power = m^{d-i} built from the top member downward.
    for (long i = spec.d(); i >= 0; --i) {
        members[static_cast<size_t>(i)] = Subspace<S>::column_space(power);
        if (i > 0) power = m * power;
    }
    return members;
}

namespace detail {

/// Shared skeleton of the twelve closed-form normalized bases. Both tabulated
/// versions are evaluated; version 2 is asserted against version 1.
template <class S>
std::vector<std::vector<S>> closed_form_basis(const ModuleSpec<S>& spec, Space s,
                                              BasisId b) {
    const long d = spec.d();
    const QContext<S> qc = spec.ctx_for(s);
    const Axis xi = b.axis, a = next(xi), c = next2(xi);

    // On V* the roles of the pairing arguments swap.
    auto pairing = [&](Axis u, Axis v) -> S {
        return s == Space::V ? spec.pairing(u, v) : spec.pairing(v, u);
    };
    const auto Na = spec.rep_ref(s, nilpotent_of_axis(a));
    const auto Nc = spec.rep_ref(s, nilpotent_of_axis(c));
    const auto& eta_a = spec.eta_coords(s, a);
    const auto& eta_c = spec.eta_coords(s, c);

    // Iterated images n_c^i eta_a and n_a^i eta_c.
    std::vector<std::vector<S>> nc_eta(d + 1), na_eta(d + 1);
    nc_eta[0] = eta_a;
    na_eta[0] = eta_c;
    for (long i = 1; i <= d; ++i) {
        nc_eta[i] = Nc.apply(nc_eta[i - 1]);
        na_eta[i] = Na.apply(na_eta[i - 1]);
    }

    auto choose2 = QContext<S>::choose2;
    std::vector<std::vector<S>> v1(d + 1), v2(d + 1);
    for (long i = 0; i <= d; ++i) {
        S c1, c2;
        if (!b.inverted && b.flavor == Flavor::row) {
            c1 = qc.q_pow(choose2(i)) / qc.q_fact(i) * pairing(xi, c) / pairing(a, c);
            c2 = qc.sign_pow(d - i) * qc.q_pow(-choose2(d - i)) / qc.q_fact(d - i) *
                 pairing(xi, a) / pairing(c, a);
            v1[i] = scale_vector(c1, nc_eta[i]);
            v2[i] = scale_vector(c2, na_eta[d - i]);
        } else if (!b.inverted && b.flavor == Flavor::col) {
            c1 = qc.sign_pow(i) * qc.q_fact(d - i) * qc.q_pow(i * (1 - d) + choose2(i)) /
                 (qc.q_fact(d) * pairing(a, xi));
            c2 = qc.q_fact(i) * qc.q_pow((d - i) * (d - 1) - choose2(d - i)) /
                 (qc.q_fact(d) * pairing(c, xi));
            v1[i] = scale_vector(c1, nc_eta[i]);
            v2[i] = scale_vector(c2, na_eta[d - i]);
        } else if (b.inverted && b.flavor == Flavor::row) {
            c1 = qc.sign_pow(i) * qc.q_pow(-choose2(i)) / qc.q_fact(i) *
                 pairing(xi, a) / pairing(c, a);
            c2 = qc.q_pow(choose2(d - i)) / qc.q_fact(d - i) * pairing(xi, c) / pairing(a, c);
            v1[i] = scale_vector(c1, na_eta[i]);
            v2[i] = scale_vector(c2, nc_eta[d - i]);
        } else {
            c1 = qc.q_fact(d - i) * qc.q_pow(i * (d - 1) - choose2(i)) /
                 (qc.q_fact(d) * pairing(c, xi));
            c2 = qc.sign_pow(d - i) * qc.q_fact(i) * qc.q_pow((d - i) * (1 - d) + choose2(d - i)) /
                 (qc.q_fact(d) * pairing(a, xi));
            v1[i] = scale_vector(c1, na_eta[i]);
            v2[i] = scale_vector(c2, nc_eta[d - i]);
        }
    }
    for (long i = 0; i <= d; ++i)
        if (!(v1[i] == v2[i]))
            throw ConsistencyError("closed-form versions disagree for " +
                                   std::string(space_name(s)) + ":" + b.str() +
                                   " component " + std::to_string(i));
    return v1;
}

} // namespace detail

/// The normalized basis b of space s, in reference coordinates. Computed from
/// both closed-form versions, which must agree.
template <class S>
std::vector<std::vector<S>> basis_vectors(const ModuleSpec<S>& spec, Space s, BasisId b) {
    return detail::closed_form_basis(spec, s, b);
}

template <class S>
ExactMatrix<S> basis_matrix(const ModuleSpec<S>& spec, Space s, BasisId b) {
    return ExactMatrix<S>::from_columns(basis_vectors(spec, s, b));
}

/// Gram matrix of a basis of V against a basis of V*: entry (r,s) is the
/// pairing of the r-th V vector with the s-th V* vector.
template <class S>
ExactMatrix<S> gram(const ModuleSpec<S>& spec, BasisId bV, BasisId bVdual) {
    auto u = basis_vectors(spec, Space::V, bV);
    auto v = basis_vectors(spec, Space::V_dual, bVdual);
    ExactMatrix<S> g(u.size(), v.size());
    for (size_t r = 0; r < u.size(); ++r)
        for (size_t c = 0; c < v.size(); ++c) g.at(r, c) = dot(u[r], v[c]);
    return g;
}

} // namespace uqsl2
