#pragma once

#include <array>
#include <string>
#include <vector>

#include "uqsl2/errors.hpp"

namespace uqsl2 {

enum class Axis { x = 0, y = 1, z = 2 };

/// Cyclic successor x -> y -> z -> x.
inline Axis next(Axis a) { return static_cast<Axis>((static_cast<int>(a) + 1) % 3); }
inline Axis next2(Axis a) { return static_cast<Axis>((static_cast<int>(a) + 2) % 3); }

inline const char* axis_name(Axis a) {
    switch (a) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        default: return "z";
    }
}

constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

enum class Gen { x, y, y_inv, z, n_x, n_y, n_z };

constexpr std::array<Gen, 7> kGenerators{Gen::x, Gen::y, Gen::y_inv, Gen::z,
                                         Gen::n_x, Gen::n_y, Gen::n_z};

inline const char* gen_name(Gen g) {
    switch (g) {
        case Gen::x: return "x";
        case Gen::y: return "y";
        case Gen::y_inv: return "y^-1";
        case Gen::z: return "z";
        case Gen::n_x: return "n_x";
        case Gen::n_y: return "n_y";
        default: return "n_z";
    }
}

inline Gen gen_of_axis(Axis a) {
    switch (a) {
        case Axis::x: return Gen::x;
        case Axis::y: return Gen::y;
        default: return Gen::z;
    }
}

inline Gen nilpotent_of_axis(Axis a) {
    switch (a) {
        case Axis::x: return Gen::n_x;
        case Axis::y: return Gen::n_y;
        default: return Gen::n_z;
    }
}

/// V carries the module structure at q, V_dual the one at q^-1.
enum class Space { V, V_dual };

inline const char* space_name(Space s) { return s == Space::V ? "V" : "V*"; }

constexpr std::array<Space, 2> kSpaces{Space::V, Space::V_dual};

enum class Flavor { row, col };

/// One of the twelve bases: axis, inverted or not, row or col flavor.
struct BasisId {
    Axis axis;
    bool inverted;
    Flavor flavor;

    friend bool operator==(const BasisId&, const BasisId&) = default;

    int index() const {
        return static_cast<int>(axis) * 4 + (inverted ? 2 : 0) +
               (flavor == Flavor::col ? 1 : 0);
    }

    BasisId flipped() const { return {axis, !inverted, flavor}; }

    /// Dual basis pairing across V and V*: row <-> inverted col.
    BasisId dual() const { return {axis, !inverted, flavor == Flavor::row ? Flavor::col : Flavor::row}; }

    std::string str() const {
        std::string s = "[" + std::string(axis_name(axis)) + "]";
        if (inverted) s += "inv_";
        s += flavor == Flavor::row ? "row" : "col";
        return s;
    }
};

inline std::vector<BasisId> all_bases() {
    std::vector<BasisId> v;
    for (Axis a : kAxes)
        for (bool inv : {false, true})
            for (Flavor f : {Flavor::row, Flavor::col}) v.push_back({a, inv, f});
    return v;
}

/// One of the six eigenspace decompositions.
struct DecompId {
    Axis axis;
    bool inverted;

    friend bool operator==(const DecompId&, const DecompId&) = default;

    std::string str() const {
        std::string s = "[" + std::string(axis_name(axis)) + "]";
        if (inverted) s += "inv";
        return s;
    }
};

inline std::vector<DecompId> all_decompositions() {
    std::vector<DecompId> v;
    for (Axis a : kAxes)
        for (bool inv : {false, true}) v.push_back({a, inv});
    return v;
}

enum class FamilyBase { K, Z, E, N, T, P };

inline const char* family_name(FamilyBase b) {
    switch (b) {
        case FamilyBase::K: return "K";
        case FamilyBase::Z: return "Z";
        case FamilyBase::E: return "E";
        case FamilyBase::N: return "N";
        case FamilyBase::T: return "T";
        default: return "P";
    }
}

/// A canonical family member: base matrix plus the three commuting order-2
/// modifiers (transpose, q -> q^-1, Z-conjugation).
struct CanonicalFamily {
    FamilyBase base;
    bool transposed = false;
    bool q_inverted = false;
    bool z_conjugated = false;

    friend bool operator==(const CanonicalFamily&, const CanonicalFamily&) = default;

    std::string str() const {
        std::string core = family_name(base);
        if (base != FamilyBase::Z) core += q_inverted ? "_q^-1" : "_q";
        if (transposed) core += "^t";
        if (z_conjugated) core = "Z" + core + "Z";
        return core;
    }
};

// ---- token parsing for the CLI and file formats ----

inline Axis parse_axis(const std::string& t) {
    if (t == "x") return Axis::x;
    if (t == "y") return Axis::y;
    if (t == "z") return Axis::z;
    throw ParseError("unknown axis '" + t + "' (expected x, y or z)");
}

/// Accepts "[y]row", "[y]col", "[y]inv_row", "[y]invcol", with optional
/// underscores and dots between pieces.
inline BasisId parse_basis(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '_' && c != '.' && c != ' ') t += c;
    if (t.size() < 4 || t[0] != '[' || t[2] != ']')
        throw ParseError("cannot parse basis '" + text +
                         "' (expected e.g. [y]row, [y]inv_col)");
    Axis a = parse_axis(t.substr(1, 1));
    std::string rest = t.substr(3);
    bool inv = false;
    if (rest.rfind("inv", 0) == 0) {
        inv = true;
        rest = rest.substr(3);
    }
    Flavor f;
    if (rest == "row") f = Flavor::row;
    else if (rest == "col") f = Flavor::col;
    else throw ParseError("cannot parse basis '" + text + "' (expected row or col flavor)");
    return {a, inv, f};
}

inline DecompId parse_decomp(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != '_' && c != '.' && c != ' ') t += c;
    if (t.size() < 3 || t[0] != '[' || t[2] != ']')
        throw ParseError("cannot parse decomposition '" + text + "'");
    Axis a = parse_axis(t.substr(1, 1));
    std::string rest = t.substr(3);
    if (rest.empty()) return {a, false};
    if (rest == "inv") return {a, true};
    throw ParseError("cannot parse decomposition '" + text + "'");
}

inline Gen parse_gen(const std::string& t) {
    if (t == "x") return Gen::x;
    if (t == "y") return Gen::y;
    if (t == "z") return Gen::z;
    if (t == "yinv" || t == "y^-1" || t == "y_inv") return Gen::y_inv;
    if (t == "nx" || t == "n_x") return Gen::n_x;
    if (t == "ny" || t == "n_y") return Gen::n_y;
    if (t == "nz" || t == "n_z") return Gen::n_z;
    throw ParseError("unknown generator '" + t + "'");
}

inline FamilyBase parse_family_base(const std::string& t) {
    if (t == "K") return FamilyBase::K;
    if (t == "Z") return FamilyBase::Z;
    if (t == "E") return FamilyBase::E;
    if (t == "N") return FamilyBase::N;
    if (t == "T") return FamilyBase::T;
    if (t == "P") return FamilyBase::P;
    throw ParseError("unknown family '" + t + "' (expected K, Z, E, N, T or P)");
}

inline Space parse_space(const std::string& t) {
    if (t == "V") return Space::V;
    if (t == "V*" || t == "Vdual" || t == "V_dual" || t == "Vs") return Space::V_dual;
    throw ParseError("unknown space '" + t + "' (expected V or V*)");
}

} // namespace uqsl2
