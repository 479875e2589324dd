#ifndef COVERLAB_INVARIANT_HPP
#define COVERLAB_INVARIANT_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "coverlab/graph.hpp"

namespace coverlab {

enum class CoverMode { Cover, Partition };

constexpr std::string_view to_string(CoverMode m) { return m == CoverMode::Cover ? "cover" : "partition"; }

/// The eight cover/partition numbers: {sp, star, path, isometric path} x {cover, partition}.
enum class Invariant { inspc, inspp, insc, insp, inpc, inpp, ispc, ispp };

inline constexpr std::array<Invariant, 8> kAllInvariants{Invariant::inspc, Invariant::inspp, Invariant::insc,
                                                         Invariant::insp,  Invariant::inpc,  Invariant::inpp,
                                                         Invariant::ispc,  Invariant::ispp};

constexpr std::string_view to_string(Invariant i) {
    switch (i) {
        case Invariant::inspc: return "inspc";
        case Invariant::inspp: return "inspp";
        case Invariant::insc: return "insc";
        case Invariant::insp: return "insp";
        case Invariant::inpc: return "inpc";
        case Invariant::inpp: return "inpp";
        case Invariant::ispc: return "ispc";
        case Invariant::ispp: return "ispp";
    }
    return "?";
}

inline std::optional<Invariant> invariant_from_string(std::string_view s) {
    for (auto i : kAllInvariants)
        if (to_string(i) == s) return i;
    return std::nullopt;
}

constexpr CoverMode mode_of(Invariant i) {
    switch (i) {
        case Invariant::inspc:
        case Invariant::insc:
        case Invariant::inpc:
        case Invariant::ispc: return CoverMode::Cover;
        default: return CoverMode::Partition;
    }
}

constexpr PieceKind kind_of(Invariant i) {
    switch (i) {
        case Invariant::inspc:
        case Invariant::inspp: return PieceKind::SPAny;
        case Invariant::insc:
        case Invariant::insp: return PieceKind::Star;
        case Invariant::inpc:
        case Invariant::inpp: return PieceKind::Path;
        case Invariant::ispc:
        case Invariant::ispp: return PieceKind::IsometricPath;
    }
    return PieceKind::SPAny;
}

/// Pairs (a, b) with a(G) <= b(G) for every graph G.
inline constexpr std::array<std::pair<Invariant, Invariant>, 9> kChainInequalities{{
    {Invariant::inspc, Invariant::insc},
    {Invariant::insc, Invariant::insp},
    {Invariant::inspp, Invariant::insp},
    {Invariant::inspc, Invariant::inpc},
    {Invariant::inpc, Invariant::inpp},
    {Invariant::inspp, Invariant::inpp},
    {Invariant::inspc, Invariant::inspp},
    {Invariant::inpc, Invariant::ispc},
    {Invariant::inpp, Invariant::ispp},
}};

}  // namespace coverlab

#endif  // COVERLAB_INVARIANT_HPP
