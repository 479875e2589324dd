// Undirected simple graphs over dense vertex indices, BFS metrics and the
// star/path piece predicates.

#ifndef COVERLAB_GRAPH_HPP
#define COVERLAB_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/vertex_set.hpp"

namespace coverlab {

using Edge = std::pair<Vertex, Vertex>;

class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t order, std::string label = {}) : rows_(order), label_(std::move(label)) {
        if (order > kMaxVertices)
            throw Error(ErrorKind::BadParameter,
                        "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxVertices));
    }

    std::size_t order() const { return rows_.size(); }
    VertexSet vertices() const { return VertexSet::prefix(order()); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    std::size_t degree(Vertex v) const { return rows_[v].size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.size();
        return twice / 2;
    }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = rows_[u].next(u + 1); v != kMaxVertices; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
        return out;
    }

    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < order(); ++v) d.push_back(degree(v));
        std::sort(d.rbegin(), d.rend());
        return d;
    }

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    /// Adds u-v; a repeated edge is a no-op.
    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        rows_[u].insert(v);
        rows_[v].insert(u);
    }
    void remove_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        rows_[u].erase(v);
        rows_[v].erase(u);
    }

    void check_vertex(Vertex v) const {
        if (v >= order())
            throw Error(ErrorKind::IndexOutOfRange,
                        "vertex " + std::to_string(v) + " not in [0, " + std::to_string(order()) + ")");
    }

    /// Structural equality (labels ignored).
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

  private:
    std::vector<VertexSet> rows_;
    std::string label_;
};

inline Graph build_graph(std::size_t order, const std::vector<Edge>& edges, std::string label = {}) {
    Graph g(order, std::move(label));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// g[keep], with vertices renumbered in ascending order. `map[i]` is the original
/// index of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> map;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out{Graph(keep.size()), keep.to_vector()};
    std::vector<std::size_t> pos(g.order(), kMaxVertices);
    for (std::size_t i = 0; i < out.map.size(); ++i) pos[out.map[i]] = i;
    for (std::size_t i = 0; i < out.map.size(); ++i)
        (g.neighbors(out.map[i]) & keep).for_each([&](Vertex w) {
            if (pos[w] > i) out.graph.add_edge(i, pos[w]);
        });
    return out;
}

inline VertexSet lift(const InducedSubgraph& sub, const VertexSet& local) {
    VertexSet s;
    local.for_each([&](Vertex v) { s.insert(sub.map[v]); });
    return s;
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct BfsLayering {
    Vertex root = 0;
    std::vector<VertexSet> layers;
    std::vector<std::size_t> dist;  // kUnreachable outside the root's component

    /// Index of the last non-empty layer.
    std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
    VertexSet component() const {
        VertexSet c;
        for (const auto& l : layers) c |= l;
        return c;
    }
};

/// BFS restricted to `within` (root must belong to it).
inline BfsLayering bfs_layering(const Graph& g, Vertex root, const VertexSet& within) {
    g.check_vertex(root);
    BfsLayering out;
    out.root = root;
    out.dist.assign(g.order(), kUnreachable);
    VertexSet seen{root};
    VertexSet frontier{root};
    out.dist[root] = 0;
    while (!frontier.empty()) {
        out.layers.push_back(frontier);
        VertexSet next;
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next &= within;
        next -= seen;
        seen |= next;
        next.for_each([&](Vertex v) { out.dist[v] = out.layers.size(); });
        frontier = next;
    }
    return out;
}

inline BfsLayering bfs_layering(const Graph& g, Vertex root) { return bfs_layering(g, root, g.vertices()); }

/// All-pairs hop distances by repeated BFS.
class DistanceMatrix {
  public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_, kUnreachable) {
        for (Vertex s = 0; s < n_; ++s) {
            auto lay = bfs_layering(g, s);
            std::copy(lay.dist.begin(), lay.dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
        }
    }
    std::size_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
    std::size_t order() const { return n_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::size_t> d_;
};

inline std::size_t eccentricity(const Graph& g, Vertex v) {
    auto lay = bfs_layering(g, v);
    if (lay.component().size() != g.order()) return kUnreachable;
    return lay.depth();
}

/// Maximum eccentricity, or nullopt when the graph is disconnected. The empty
/// graph and K_1 have diameter 0.
inline std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto e = eccentricity(g, v);
        if (e == kUnreachable) return std::nullopt;
        best = std::max(best, e);
    }
    return best;
}

inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        auto comp = bfs_layering(g, left.first(), within).component();
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

inline bool is_connected(const Graph& g, const VertexSet& within) {
    if (within.empty()) return true;
    return bfs_layering(g, within.first(), within).component() == within;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

// ---------------------------------------------------------------------------
// Piece shapes

enum class PieceKind { Star, Path, IsometricPath, SPAny };

constexpr std::string_view to_string(PieceKind k) {
    switch (k) {
        case PieceKind::Star: return "star";
        case PieceKind::Path: return "path";
        case PieceKind::IsometricPath: return "isometric-path";
        case PieceKind::SPAny: return "sp";
    }
    return "?";
}

inline std::optional<PieceKind> piece_kind_from_string(std::string_view s) {
    for (auto k : {PieceKind::Star, PieceKind::Path, PieceKind::IsometricPath, PieceKind::SPAny})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

inline std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.neighbors(v).intersection_size(s); });
    return twice / 2;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](Vertex v) {
        VertexSet others = s;
        others.erase(v);
        ok = ok && others.is_subset_of(g.neighbors(v));
    });
    return ok;
}

namespace detail {

inline void require_piece(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw Error(ErrorKind::EmptyPiece, "piece has no vertices");
    if (!s.is_subset_of(g.vertices())) throw Error(ErrorKind::IndexOutOfRange, "piece leaves the vertex set");
}

inline bool star_shape(const Graph& g, const VertexSet& s) {
    const std::size_t k = s.size();
    if (k == 1) return true;
    if (k == 2) return g.adjacent(s.first(), s.last());
    for (Vertex c : s) {
        VertexSet rest = s;
        rest.erase(c);
        if (rest.is_subset_of(g.neighbors(c))) return is_independent(g, rest);
    }
    return false;
}

// Endpoints of g[s] when it is a path (equal for a single vertex).
inline std::optional<std::pair<Vertex, Vertex>> path_ends(const Graph& g, const VertexSet& s) {
    const std::size_t k = s.size();
    if (k == 1) return std::pair{s.first(), s.first()};
    if (induced_edge_count(g, s) != k - 1 || !is_connected(g, s)) return std::nullopt;
    std::vector<Vertex> ends;
    for (Vertex v : s) {
        auto d = g.neighbors(v).intersection_size(s);
        if (d > 2) return std::nullopt;
        if (d == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return std::nullopt;
    return std::pair{ends[0], ends[1]};
}

}  // namespace detail

/// True iff g[s] is isomorphic to a member of the kind's family. A single
/// vertex is accepted by every kind.
inline bool piece_shape(const Graph& g, const VertexSet& s, PieceKind kind) {
    detail::require_piece(g, s);
    switch (kind) {
        case PieceKind::Star: return detail::star_shape(g, s);
        case PieceKind::Path: return detail::path_ends(g, s).has_value();
        case PieceKind::IsometricPath: {
            auto ends = detail::path_ends(g, s);
            if (!ends) return false;
            if (s.size() <= 2) return true;
            return bfs_layering(g, ends->first).dist[ends->second] == s.size() - 1;
        }
        case PieceKind::SPAny: return detail::star_shape(g, s) || detail::path_ends(g, s).has_value();
    }
    return false;
}

/// Vertices of an induced path in walking order from its lower-index end.
inline std::vector<Vertex> path_order(const Graph& g, const VertexSet& s) {
    auto ends = detail::path_ends(g, s);
    if (!ends) throw Error(ErrorKind::BadInput, "vertex set does not induce a path");
    std::vector<Vertex> seq{std::min(ends->first, ends->second)};
    VertexSet left = s;
    left.erase(seq.back());
    while (!left.empty()) {
        Vertex nxt = (g.neighbors(seq.back()) & left).first();
        seq.push_back(nxt);
        left.erase(nxt);
    }
    return seq;
}

}  // namespace coverlab

#endif  // COVERLAB_GRAPH_HPP
