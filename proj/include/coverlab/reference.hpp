// Slow reference computations by subset dynamic programming, used to
// cross-check the branch-and-bound solvers on small graphs.

#ifndef COVERLAB_REFERENCE_HPP
#define COVERLAB_REFERENCE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/invariant.hpp"

namespace coverlab::reference {

inline constexpr std::size_t kMaxOrder = 16;

using Mask = std::uint32_t;

namespace detail {

inline void require_small(const Graph& g) {
    if (g.order() > kMaxOrder) throw Error(ErrorKind::BadParameter, "reference computations need order <= 16");
}

inline std::vector<Mask> rows(const Graph& g) {
    std::vector<Mask> r(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) g.neighbors(v).for_each([&](Vertex w) { r[v] |= Mask{1} << w; });
    return r;
}

inline std::vector<std::vector<std::size_t>> all_pairs(const Graph& g) {
    const std::size_t n = g.order(), inf = std::numeric_limits<std::size_t>::max() / 4;
    std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        g.neighbors(u).for_each([&](Vertex v) { d[u][v] = 1; });
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace detail

/// Every vertex subset that induces a piece of the given kind, as bitmasks.
inline std::vector<Mask> pieces(const Graph& g, PieceKind kind) {
    detail::require_small(g);
    const std::size_t n = g.order();
    const auto adj = detail::rows(g);
    const auto dist = detail::all_pairs(g);
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(s));
        std::size_t edges = 0, max_deg = 0, leaves = 0;
        std::vector<Vertex> ends;
        for (Vertex v = 0; v < n; ++v)
            if (s >> v & 1) {
                const auto d = static_cast<std::size_t>(__builtin_popcount(adj[v] & s));
                edges += d;
                max_deg = std::max(max_deg, d);
                if (d <= 1) ends.push_back(v), ++leaves;
            }
        edges /= 2;
        // A forest with k - 1 edges and a vertex of degree k - 1 is a star; with
        // max degree 2 and connected it is a path.
        const bool star = k == 1 || (edges == k - 1 && max_deg == k - 1);
        bool connected = false;
        {
            Mask seen = s & (~s + 1), frontier = seen;
            while (frontier) {
                Mask next = 0;
                for (Vertex v = 0; v < n; ++v)
                    if (frontier >> v & 1) next |= adj[v] & s;
                frontier = next & ~seen;
                seen |= next;
            }
            connected = seen == s;
        }
        const bool path = k == 1 || (connected && edges == k - 1 && max_deg <= 2);
        const bool iso = path && (k == 1 || (ends.size() == 2 && dist[ends[0]][ends[1]] == k - 1));
        bool ok = false;
        switch (kind) {
            case PieceKind::Star: ok = star; break;
            case PieceKind::Path: ok = path; break;
            case PieceKind::IsometricPath: ok = iso; break;
            case PieceKind::SPAny: ok = star || path; break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

/// Minimum cover or partition size over all subfamilies of `pieces(g, kind)`.
inline std::size_t min_pieces(const Graph& g, PieceKind kind, CoverMode mode) {
    detail::require_small(g);
    const auto ps = pieces(g, kind);
    const Mask full = (Mask{1} << g.order()) - 1;
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
    // best[m] = fewest pieces covering exactly / at least the vertices of m.
    std::vector<std::size_t> best(std::size_t{full} + 1, inf);
    best[0] = 0;
    for (Mask m = 1; m <= full; ++m) {
        const Mask low = m & (~m + 1);
        for (Mask p : ps) {
            if (!(p & low)) continue;
            if (mode == CoverMode::Partition && (p & ~m)) continue;
            best[m] = std::min(best[m], best[m & ~p] + 1);
        }
    }
    return best[full];
}

inline std::size_t invariant(const Graph& g, Invariant inv) { return min_pieces(g, kind_of(inv), mode_of(inv)); }

inline std::size_t chromatic_number(const Graph& g) {
    detail::require_small(g);
    const std::size_t n = g.order();
    const auto adj = detail::rows(g);
    const Mask full = (Mask{1} << n) - 1;
    std::vector<std::size_t> best(std::size_t{full} + 1, n + 1);
    best[0] = 0;
    for (Mask m = 1; m <= full; ++m) {
        const Mask low = m & (~m + 1);
        for (Mask s = m; s; s = (s - 1) & m) {
            if (!(s & low)) continue;
            bool independent = true;
            for (Vertex v = 0; v < n && independent; ++v)
                if ((s >> v & 1) && (adj[v] & s)) independent = false;
            if (independent) best[m] = std::min(best[m], best[m & ~s] + 1);
        }
    }
    return best[full];
}

inline std::size_t domination_number(const Graph& g) {
    detail::require_small(g);
    const std::size_t n = g.order();
    const auto adj = detail::rows(g);
    const Mask full = (Mask{1} << n) - 1;
    std::size_t best = n;
    for (Mask s = 0; s <= full; ++s) {
        Mask covered = s;
        for (Vertex v = 0; v < n; ++v)
            if (s >> v & 1) covered |= adj[v];
        if (covered == full) best = std::min<std::size_t>(best, __builtin_popcount(s));
    }
    return best;
}

}  // namespace coverlab::reference

#endif  // COVERLAB_REFERENCE_HPP
