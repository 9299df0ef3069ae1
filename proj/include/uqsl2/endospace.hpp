#pragma once

#include <string>
#include <vector>

#include "uqsl2/ids.hpp"
#include "uqsl2/matrix.hpp"
#include "uqsl2/module_model.hpp"
#include "uqsl2/subspace.hpp"

namespace uqsl2 {

/// Shape constraints for a linear map relative to a decomposition {V_i}:
/// diagonal      phi V_i <= V_i
/// lowering      phi V_i <= V_{i-1}, phi V_0 = 0
/// raising       phi V_i <= V_{i+1}, phi V_d = 0
/// quasi-lowering phi V_i <= V_i + V_{i-1}
/// quasi-raising  phi V_i <= V_i + V_{i+1}
enum class MapShape { diagonal, lowering, raising, quasi_lowering, quasi_raising };

inline const char* map_shape_name(MapShape s) {
    switch (s) {
        case MapShape::diagonal: return "diagonal";
        case MapShape::lowering: return "lowering";
        case MapShape::raising: return "raising";
        case MapShape::quasi_lowering: return "quasi-lowering";
        default: return "quasi-raising";
    }
}

struct EndoConstraint {
    DecompId decomp;
    MapShape shape;
};

inline bool shape_allows(MapShape s, long i, long j) {
    switch (s) {
        case MapShape::diagonal: return i == j;
        case MapShape::lowering: return i == j - 1;
        case MapShape::raising: return i == j + 1;
        case MapShape::quasi_lowering: return i == j || i == j - 1;
        case MapShape::quasi_raising: return i == j || i == j + 1;
    }
    throw ParameterError("unknown map-shape constraint");
}

/// The space of all endomorphisms (flattened row-major into vectors of length
/// (d+1)^2) satisfying every constraint, as a canonical subspace. Each
/// constraint contributes the linear equations "(B^-1 Phi B)_{ij} = 0 for
/// disallowed (i,j)" where B is a basis adapted to its decomposition.
template <class S>
Subspace<S> constrained_endomorphism_space(const ModuleSpec<S>& spec, Space s,
                                           const std::vector<EndoConstraint>& constraints) {
    const long d = spec.d();
    const size_t n = spec.dim();
    std::vector<std::vector<S>> rows;
    for (const EndoConstraint& con : constraints) {
        auto comps = decomposition(spec, s, con.decomp);
        std::vector<std::vector<S>> cols;
        for (auto& c : comps) cols.push_back(c.basis_vector(0));
        ExactMatrix<S> B = ExactMatrix<S>::from_columns(cols);
        ExactMatrix<S> Binv = B.inverse();
        for (long i = 0; i < static_cast<long>(n); ++i)
            for (long j = 0; j < static_cast<long>(n); ++j) {
                if (shape_allows(con.shape, i, j)) continue;
                // coefficient of Phi_{kl} in (B^-1 Phi B)_{ij} is Binv_{ik} B_{lj}
                std::vector<S> row(n * n, S(0));
                for (size_t k = 0; k < n; ++k) {
                    if (Binv.at(i, k).is_zero()) continue;
                    for (size_t l = 0; l < n; ++l)
                        row[k * n + l] = Binv.at(i, k) * B.at(l, j);
                }
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return Subspace<S>::full(n * n);
    ExactMatrix<S> system(rows.size(), n * n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n * n; ++c) system.at(r, c) = rows[r][c];
    (void)d;
    return Subspace<S>::kernel(system);
}

template <class S>
std::vector<S> flatten_matrix(const ExactMatrix<S>& m) {
    std::vector<S> v(m.rows() * m.cols(), S(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

} // namespace uqsl2
