// Brute-force oracles for tests. Deliberately naive and independent of the
// library's search code: adjacency matrices, explicit enumeration, no pruning
// beyond what keeps the runtimes small.

#ifndef COVERLAB_TESTS_ORACLE_HPP
#define COVERLAB_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <vector>

#include "coverlab/graph.hpp"

namespace oracle {

using coverlab::Graph;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const Graph& g) {
    Matrix m(g.order(), std::vector<bool>(g.order(), false));
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
    return m;
}

inline std::vector<int> bfs(const Matrix& a, std::size_t s) {
    std::vector<int> d(a.size(), -1);
    std::queue<std::size_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (std::size_t v = 0; v < a.size(); ++v)
            if (a[u][v] && d[v] < 0) d[v] = d[u] + 1, q.push(v);
    }
    return d;
}

inline std::vector<std::size_t> members(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

inline bool is_star(const Matrix& a, std::uint64_t mask) {
    const auto vs = members(mask);
    if (vs.size() <= 2) return vs.size() == 1 || a[vs[0]][vs[1]];
    for (auto c : vs) {
        bool ok = true;
        for (auto x : vs)
            for (auto y : vs) {
                if (x == y) continue;
                const bool want = (x == c || y == c);
                if (a[x][y] != want) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

// Walk from an end vertex; an induced path is visited in one sweep.
inline bool is_path(const Matrix& a, std::uint64_t mask, bool isometric) {
    const auto vs = members(mask);
    if (vs.size() == 1) return true;
    std::size_t edges = 0;
    for (auto x : vs)
        for (auto y : vs) edges += x < y && a[x][y];
    if (edges != vs.size() - 1) return false;
    for (auto start : vs) {
        std::size_t deg = 0;
        for (auto y : vs) deg += a[start][y];
        if (deg != 1) continue;
        std::vector<std::size_t> walk{start};
        std::uint64_t used = std::uint64_t{1} << start;
        while (true) {
            std::size_t next = 64, count = 0;
            for (auto y : vs)
                if (!(used >> y & 1) && a[walk.back()][y]) next = y, ++count;
            if (count != 1) break;
            walk.push_back(next);
            used |= std::uint64_t{1} << next;
        }
        if (walk.size() != vs.size()) return false;
        if (!isometric) return true;
        return bfs(a, walk.front())[walk.back()] == static_cast<int>(vs.size() - 1);
    }
    return false;
}

enum class Kind { Star, Path, Isometric, Any };

inline std::vector<std::uint64_t> all_pieces(const Graph& g, Kind kind) {
    const auto a = matrix(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
        bool ok = false;
        switch (kind) {
            case Kind::Star: ok = is_star(a, s); break;
            case Kind::Path: ok = is_path(a, s, false); break;
            case Kind::Isometric: ok = is_path(a, s, true); break;
            case Kind::Any: ok = is_star(a, s) || is_path(a, s, false); break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

/// Smallest subfamily of pieces that covers (or partitions) V, found by
/// trying families of size 1, 2, ... in turn.
inline std::size_t min_family(const Graph& g, Kind kind, bool partition) {
    const auto pieces = all_pieces(g, kind);
    const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
    std::function<bool(std::uint64_t, std::size_t)> fits = [&](std::uint64_t covered, std::size_t left) {
        if (covered == full) return true;
        if (left == 0) return false;
        const std::uint64_t pivot = ~covered & (covered + 1);  // lowest uncovered vertex
        for (auto p : pieces) {
            if (!(p & pivot)) continue;
            if (partition && (p & covered)) continue;
            if (fits(covered | p, left - 1)) return true;
        }
        return false;
    };
    for (std::size_t k = 0;; ++k)
        if (fits(0, k)) return k;
}

inline std::size_t chromatic_number(const Graph& g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    if (n == 0) return 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> col(n, 0);
        std::function<bool(std::size_t)> place = [&](std::size_t v) {
            if (v == n) return true;
            for (std::size_t c = 0; c < k; ++c) {
                bool ok = true;
                for (std::size_t u = 0; u < v; ++u)
                    if (a[u][v] && col[u] == c) ok = false;
                if (!ok) continue;
                col[v] = c;
                if (place(v + 1)) return true;
            }
            return false;
        };
        if (place(0)) return k;
    }
    return n;
}

inline std::size_t clique_number(const Graph& g) {
    const auto a = matrix(g);
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        const auto vs = members(s);
        bool ok = true;
        for (auto x : vs)
            for (auto y : vs)
                if (x < y && !a[x][y]) ok = false;
        if (ok) best = std::max(best, vs.size());
    }
    return best;
}

inline std::size_t domination_number(const Graph& g) {
    const auto a = matrix(g);
    const std::size_t n = g.order();
    std::size_t best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            bool hit = s >> v & 1;
            for (std::size_t u = 0; u < n && !hit; ++u) hit = (s >> u & 1) && a[u][v];
            ok = hit;
        }
        if (ok) best = std::min<std::size_t>(best, members(s).size());
    }
    return best;
}

inline int diameter(const Graph& g) {
    const auto a = matrix(g);
    int best = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
        for (int d : bfs(a, v)) {
            if (d < 0) return -1;
            best = std::max(best, d);
        }
    return best;
}

/// Induced-subgraph containment by trying every injective map.
inline bool contains_induced(const Graph& host, const Graph& pattern) {
    const auto h = matrix(host), p = matrix(pattern);
    const std::size_t k = pattern.order(), n = host.order();
    if (k > n) return false;
    std::vector<std::size_t> map(k);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == k) return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = h[map[j]][v] == p[j][i];
            if (!ok) continue;
            used[v] = true;
            map[i] = v;
            if (go(i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return go(0);
}

/// Whether some graph on `order` vertices has no K_s and no independent t-set,
/// by extending graphs one vertex at a time.
inline bool ramsey_graph_exists(std::size_t s, std::size_t t, std::size_t order) {
    std::vector<std::uint32_t> adj(order, 0);
    auto has = [&](std::size_t v, std::size_t need, bool clique) {
        // a set of size `need` containing v that is a clique / independent set
        std::function<bool(std::uint32_t, std::size_t)> grow = [&](std::uint32_t cand, std::size_t k) {
            if (k == 0) return true;
            for (std::size_t u = 0; u < 32; ++u) {
                if (!(cand >> u & 1)) continue;
                cand &= ~(std::uint32_t{1} << u);
                const std::uint32_t next = clique ? (cand & adj[u]) : (cand & ~adj[u]);
                if (grow(next, k - 1)) return true;
            }
            return false;
        };
        const std::uint32_t before = (std::uint32_t{1} << v) - 1;
        const std::uint32_t cand = clique ? (adj[v] & before) : (~adj[v] & before);
        return grow(cand, need - 1);
    };
    std::function<bool(std::size_t)> extend = [&](std::size_t v) {
        if (v == order) return true;
        for (std::uint32_t row = 0; row < (std::uint32_t{1} << v); ++row) {
            adj[v] = row;
            for (std::size_t u = 0; u < v; ++u) {
                if (row >> u & 1)
                    adj[u] |= std::uint32_t{1} << v;
                else
                    adj[u] &= ~(std::uint32_t{1} << v);
            }
            if (!has(v, s, true) && !has(v, t, false) && extend(v + 1)) return true;
        }
        for (std::size_t u = 0; u < v; ++u) adj[u] &= ~(std::uint32_t{1} << v);
        adj[v] = 0;
        return false;
    };
    return extend(0);
}

inline bool has_clique(const Graph& g, std::size_t k, bool independent) {
    const auto a = matrix(g);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        const auto vs = members(s);
        if (vs.size() != k) continue;
        bool ok = true;
        for (auto x : vs)
            for (auto y : vs)
                if (x < y && a[x][y] == independent) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle

#endif  // COVERLAB_TESTS_ORACLE_HPP
