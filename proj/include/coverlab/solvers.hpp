// Exact cover / partition numbers with certificates, and minimum dominating sets.
//
// Covers are solved as set cover over inclusion-maximal pieces (every piece
// extends to a maximal one, so this loses nothing). Partitions cannot use that
// shortcut and branch over every piece through the least uncovered vertex.

#ifndef COVERLAB_SOLVERS_HPP
#define COVERLAB_SOLVERS_HPP

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/invariant.hpp"
#include "coverlab/set_cover.hpp"

namespace coverlab {

struct PieceCertificate {
    CoverMode mode = CoverMode::Cover;
    PieceKind kind = PieceKind::SPAny;
    std::vector<VertexSet> pieces;
    std::size_t value = 0;
    bool optimal = true;  // false: deadline hit, pieces are the best incumbent
};

struct SolveConfig {
    double time_budget = 3600.0;  // seconds
    std::optional<std::size_t> upper_bound_seed;
    std::size_t jobs = 1;

    Deadline deadline() const {
        if (!(time_budget > 0)) throw Error(ErrorKind::BadParameter, "time budget must be positive");
        return Deadline::after_seconds(time_budget);
    }
};

namespace detail {

inline void sort_pieces(std::vector<VertexSet>& pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
}

inline void dedupe(std::vector<VertexSet>& sets) {
    sort_pieces(sets);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Keep only sets not strictly contained in another.
inline std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets) {
    dedupe(sets);
    std::stable_sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    for (const auto& s : sets) {
        bool inside = false;
        for (const auto& k : kept)
            if (k.size() > s.size() && s.is_subset_of(k)) {
                inside = true;
                break;
            }
        if (!inside) kept.push_back(s);
    }
    sort_pieces(kept);
    return kept;
}

struct TimedOut {};

// Polls a deadline every 1024 steps of an enumeration.
class Ticker {
  public:
    explicit Ticker(const Deadline& d = {}) : deadline_(d) {}
    void tick() const {
        if ((++steps_ & 1023) == 0 && deadline_.expired()) throw TimedOut{};
    }

  private:
    Deadline deadline_;
    mutable std::size_t steps_ = 0;
};

inline std::vector<VertexSet> singletons(const Graph& g) {
    std::vector<VertexSet> out;
    g.vertices().for_each([&](Vertex v) { out.push_back(VertexSet{v}); });
    return out;
}

// Calls f(I) for every independent subset I of `cands` (including the empty set).
template <class F>
void for_each_independent(const Graph& g, const VertexSet& cands, VertexSet& cur, F&& f) {
    f(cur);
    cands.for_each([&](Vertex v) {
        VertexSet rest;
        for (Vertex w = cands.next(v + 1); w != kMaxVertices; w = cands.next(w + 1)) rest.insert(w);
        rest -= g.neighbors(v);
        cur.insert(v);
        for_each_independent(g, rest, cur, f);
        cur.erase(v);
    });
}

inline void maximal_stars(const Graph& g, const VertexSet& within, std::vector<VertexSet>& out, const Ticker& t) {
    within.for_each([&](Vertex c) {
        const VertexSet nb = g.neighbors(c) & within;
        if (nb.empty()) {
            out.push_back(VertexSet{c});
            return;
        }
        // Maximal independent subsets of nb: independent sets with no addable vertex.
        VertexSet cur;
        for_each_independent(g, nb, cur, [&](const VertexSet& i) {
            t.tick();
            if (i.empty()) return;
            VertexSet blocked = i;
            i.for_each([&](Vertex v) { blocked |= g.neighbors(v); });
            if (!nb.is_subset_of(blocked)) return;
            VertexSet s = i;
            s.insert(c);
            out.push_back(s);
        });
    });
}

class PathWalker {
  public:
    PathWalker(const Graph& g, const VertexSet& within, const DistanceMatrix* dist, const Ticker& t)
        : g_(g), within_(within), dist_(dist), ticker_(t) {}

    // Vertices that extend the path at `end` (other end `other`, path set `p`).
    VertexSet extensions(const VertexSet& p, Vertex end, Vertex other) const {
        VertexSet out;
        (g_.neighbors(end) & (within_ - p)).for_each([&](Vertex w) {
            if (dist_) {
                if ((*dist_)(w, other) == p.size()) out.insert(w);
            } else if (g_.neighbors(w).intersection_size(p) == 1) {
                out.insert(w);
            }
        });
        return out;
    }

    // Every induced (or geodesic) path not extendable at either end.
    void maximal(std::vector<VertexSet>& out) const {
        within_.for_each([&](Vertex s) {
            VertexSet p{s};
            grow(s, s, p, out);
        });
    }

  private:
    void grow(Vertex start, Vertex end, VertexSet& p, std::vector<VertexSet>& out) const {
        ticker_.tick();
        const VertexSet ext = extensions(p, end, start);
        if (ext.empty() && start <= end && extensions(p, start, end).empty()) out.push_back(p);
        ext.for_each([&](Vertex w) {
            p.insert(w);
            grow(start, w, p, out);
            p.erase(w);
        });
    }

    const Graph& g_;
    VertexSet within_;
    const DistanceMatrix* dist_;
    const Ticker& ticker_;
};

inline std::vector<VertexSet> maximal_pieces(const Graph& g, PieceKind kind, const VertexSet& within, const Ticker& t) {
    if (!within.is_subset_of(g.vertices())) throw Error(ErrorKind::IndexOutOfRange, "within leaves the vertex set");
    std::vector<VertexSet> out;
    if (kind == PieceKind::Star || kind == PieceKind::SPAny) maximal_stars(g, within, out, t);
    if (kind == PieceKind::Path || kind == PieceKind::SPAny) PathWalker(g, within, nullptr, t).maximal(out);
    if (kind == PieceKind::IsometricPath) {
        const DistanceMatrix dist(g);
        PathWalker(g, within, &dist, t).maximal(out);
    }
    return inclusion_maximal(std::move(out));
}

}  // namespace detail

/// All inclusion-maximal pieces of the given kind inside `within`.
inline std::vector<VertexSet> enumerate_maximal_pieces(const Graph& g, PieceKind kind, const VertexSet& within) {
    return detail::maximal_pieces(g, kind, within, detail::Ticker{});
}

inline std::vector<VertexSet> enumerate_maximal_pieces(const Graph& g, PieceKind kind) {
    return enumerate_maximal_pieces(g, kind, g.vertices());
}

/// Minimum induced cover by pieces of `kind`.
inline PieceCertificate min_cover(const Graph& g, PieceKind kind, const SolveConfig& cfg = {}) {
    if (g.order() == 0) throw Error(ErrorKind::BadParameter, "graph has no vertices");
    SetCoverOptions opt;
    opt.deadline = cfg.deadline();
    std::vector<VertexSet> candidates;
    try {
        candidates = detail::maximal_pieces(g, kind, g.vertices(), detail::Ticker{opt.deadline});
    } catch (const detail::TimedOut&) {
        return {CoverMode::Cover, kind, detail::singletons(g), g.order(), false};
    }
    opt.upper_bound_seed = cfg.upper_bound_seed;
    opt.jobs = cfg.jobs;
    const auto res = exact_set_cover(g.vertices(), candidates, opt);
    PieceCertificate cert{CoverMode::Cover, kind, {}, 0, res.optimal};
    for (auto i : res.chosen) cert.pieces.push_back(candidates[i]);
    detail::sort_pieces(cert.pieces);
    cert.value = cert.pieces.size();
    return cert;
}

namespace detail {

// Every piece of a kind that contains a given vertex and lies inside a vertex set.
class PieceEnumerator {
  public:
    PieceEnumerator(const Graph& g, PieceKind kind, const Deadline& d = {}) : g_(g), kind_(kind), ticker_(d) {
        if (kind == PieceKind::IsometricPath) dist_ = DistanceMatrix(g);
    }

    std::vector<VertexSet> containing(Vertex p, const VertexSet& within) const {
        std::vector<VertexSet> out;
        if (kind_ == PieceKind::Star || kind_ == PieceKind::SPAny) stars(p, within, out);
        if (kind_ != PieceKind::Star) paths(p, within, out);
        if (kind_ == PieceKind::SPAny) dedupe(out);
        std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
            return a.size() != b.size() ? a.size() > b.size() : lex_less(a, b);
        });
        return out;
    }

    std::size_t max_piece_size() const {
        std::size_t best = 1;
        g_.vertices().for_each([&](Vertex v) {
            for (const auto& s : containing(v, g_.vertices())) best = std::max(best, s.size());
        });
        return best;
    }

  private:
    void stars(Vertex p, const VertexSet& within, std::vector<VertexSet>& out) const {
        const VertexSet nb = g_.neighbors(p) & within;
        VertexSet cur{p};
        for_each_independent(g_, nb, cur, [&](const VertexSet& s) {
            ticker_.tick();
            out.push_back(s);
        });
        // p as a leaf of a star with at least two leaves centred at c.
        nb.for_each([&](Vertex c) {
            VertexSet others = g_.neighbors(c) & within;
            others -= g_.neighbors(p);
            others.erase(p);
            VertexSet base{c, p};
            for_each_independent(g_, others, base, [&](const VertexSet& s) {
                ticker_.tick();
                if (s.size() > 2) out.push_back(s);
            });
        });
    }

    bool extends(const VertexSet& path, Vertex end, Vertex other, Vertex w) const {
        if (kind_ == PieceKind::IsometricPath) return dist_(w, other) == path.size();
        return (g_.neighbors(w) & path) == VertexSet{end};
    }

    // Left arm first, then right arm; a path with p inside is emitted once by
    // requiring the right arm to start above the left arm's first vertex.
    void paths(Vertex p, const VertexSet& within, std::vector<VertexSet>& out) const {
        VertexSet path{p};
        grow_left(p, p, kMaxVertices, path, within, out);
    }

    void grow_left(Vertex p, Vertex left_end, Vertex left_first, VertexSet& path, const VertexSet& within,
                   std::vector<VertexSet>& out) const {
        ticker_.tick();
        if (left_first == kMaxVertices) out.push_back(path);
        grow_right(p, left_end, left_first, kMaxVertices, path, within, out);
        (g_.neighbors(left_end) & (within - path)).for_each([&](Vertex w) {
            if (!extends(path, left_end, p, w)) return;
            path.insert(w);
            grow_left(p, w, left_first == kMaxVertices ? w : left_first, path, within, out);
            path.erase(w);
        });
    }

    void grow_right(Vertex right_end, Vertex left_end, Vertex left_first, Vertex right_first, VertexSet& path,
                    const VertexSet& within, std::vector<VertexSet>& out) const {
        (g_.neighbors(right_end) & (within - path)).for_each([&](Vertex w) {
            const bool first_step = right_first == kMaxVertices;
            if (first_step && left_first != kMaxVertices && w < left_first) return;
            if (!extends(path, right_end, left_end, w)) return;
            ticker_.tick();
            path.insert(w);
            out.push_back(path);
            grow_right(w, left_end, left_first, first_step ? w : right_first, path, within, out);
            path.erase(w);
        });
    }

    const Graph& g_;
    PieceKind kind_;
    DistanceMatrix dist_;
    Ticker ticker_;
};

struct PartitionMemo {
    std::size_t value = 0;  // exact value, or a lower bound when !exact
    bool exact = false;
    VertexSet choice;
};

class PartitionSearch {
  public:
    using TimedOut = detail::TimedOut;
    struct Outcome {
        std::size_t value;  // exact if <= budget, otherwise a lower bound > budget
        VertexSet choice;
    };

    static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

    PartitionSearch(const Graph& g, PieceKind kind, const Deadline& d) : g_(g), pieces_(g, kind, d), deadline_(d) {
        max_size_ = pieces_.max_piece_size();
    }

    std::size_t bound(const VertexSet& u) const { return (u.size() + max_size_ - 1) / max_size_; }

    std::vector<VertexSet> greedy() const {
        std::vector<VertexSet> out;
        VertexSet left = g_.vertices();
        while (!left.empty()) {
            auto cands = pieces_.containing(left.first(), left);
            out.push_back(cands.front());
            left -= cands.front();
        }
        return out;
    }

    std::vector<VertexSet> top_branches() const { return pieces_.containing(0, g_.vertices()); }

    Outcome solve(const VertexSet& u, std::size_t budget) {
        if (u.empty()) return {0, {}};
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) throw TimedOut{};

        std::size_t lb = bound(u);
        auto it = memo_.find(u);
        if (it != memo_.end()) {
            if (it->second.exact) return {it->second.value, it->second.choice};
            lb = std::max(lb, it->second.value);
        }
        if (lb > budget) return {lb, {}};

        std::size_t best = budget + 1;  // values above the budget are not wanted
        std::size_t fail_lb = kMaxVertices + 1;
        VertexSet choice;
        for (const auto& s : pieces_.containing(u.first(), u)) {
            const std::size_t cap = std::min(budget, best - 1);
            const VertexSet rest = u - s;
            if (1 + bound(rest) > cap) {
                fail_lb = std::min(fail_lb, 1 + bound(rest));
                continue;
            }
            const auto r = solve(rest, cap - 1);
            if (1 + r.value <= cap) {
                best = 1 + r.value;
                choice = s;
                if (best == lb) break;
            } else {
                fail_lb = std::min(fail_lb, 1 + r.value);
            }
        }
        if (best <= budget) {
            store(u, {best, true, choice});
            return {best, choice};
        }
        const std::size_t proven = std::max(lb, std::max(fail_lb, budget + 1));
        store(u, {proven, false, {}});
        return {proven, {}};
    }

    // Rebuilds the pieces of an optimal partition of u with known value.
    std::vector<VertexSet> reconstruct(VertexSet u, std::size_t value) {
        std::vector<VertexSet> out;
        while (!u.empty()) {
            auto r = solve(u, value);
            if (r.value != value) throw Error(ErrorKind::InternalInvariantBroken, "partition reconstruction lost track");
            out.push_back(r.choice);
            u -= r.choice;
            --value;
        }
        return out;
    }

  private:
    void store(const VertexSet& u, PartitionMemo m) {
        auto it = memo_.find(u);
        if (it != memo_.end()) {
            if (!it->second.exact) it->second = m;
            return;
        }
        if (memo_.size() < kMemoCap) memo_.emplace(u, m);
    }

    const Graph& g_;
    PieceEnumerator pieces_;
    Deadline deadline_;
    std::size_t max_size_ = 1;
    std::size_t nodes_ = 0;
    std::unordered_map<VertexSet, PartitionMemo, VertexSetHash> memo_;
};

}  // namespace detail

/// Minimum induced partition into pieces of `kind`.
inline PieceCertificate min_partition(const Graph& g, PieceKind kind, const SolveConfig& cfg = {}) {
    if (g.order() == 0) throw Error(ErrorKind::BadParameter, "graph has no vertices");
    const Deadline deadline = cfg.deadline();
    PieceCertificate cert{CoverMode::Partition, kind, {}, 0, true};
    auto finish = [&](std::vector<VertexSet> pieces, bool optimal) {
        cert.pieces = std::move(pieces);
        detail::sort_pieces(cert.pieces);
        cert.value = cert.pieces.size();
        cert.optimal = optimal;
        return cert;
    };

    std::optional<detail::PartitionSearch> search;
    std::vector<VertexSet> incumbent;
    try {
        search.emplace(g, kind, deadline);
        incumbent = search->greedy();
    } catch (const detail::TimedOut&) {
        return finish(detail::singletons(g), false);
    }
    std::size_t target = incumbent.size();

    if (cfg.jobs > 1 && !cfg.upper_bound_seed) {
        // Workers take top-level branches and share the best total found; the
        // certificate is then rebuilt single-threaded for the proven optimum.
        std::atomic<std::size_t> best{target};
        std::atomic<std::size_t> next{0};
        std::atomic<bool> timed_out{false};
        std::vector<VertexSet> top;
        try {
            top = search->top_branches();
        } catch (const detail::TimedOut&) {
            return finish(std::move(incumbent), false);
        }
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(cfg.jobs, top.size()); ++t) {
            pool.emplace_back([&] {
                try {
                    detail::PartitionSearch local(g, kind, deadline);
                    for (std::size_t k; (k = next.fetch_add(1)) < top.size();) {
                        const std::size_t total = best.load();
                        if (total < 2) continue;
                        const auto r = local.solve(g.vertices() - top[k], total - 2);
                        if (r.value > total - 2) continue;
                        auto cur = best.load();
                        while (r.value + 1 < cur && !best.compare_exchange_weak(cur, r.value + 1)) {
                        }
                    }
                } catch (const detail::PartitionSearch::TimedOut&) {
                    timed_out = true;
                }
            });
        }
        for (auto& th : pool) th.join();
        if (timed_out || best.load() == target) return finish(std::move(incumbent), !timed_out);
        try {
            return finish(search->reconstruct(g.vertices(), best.load()), true);
        } catch (const detail::PartitionSearch::TimedOut&) {
            return finish(std::move(incumbent), false);
        }
    }

    try {
        std::size_t budget = target - 1;
        if (cfg.upper_bound_seed && *cfg.upper_bound_seed < target) budget = *cfg.upper_bound_seed;
        auto r = search->solve(g.vertices(), budget);
        if (r.value > budget && budget != target - 1) r = search->solve(g.vertices(), target - 1);
        if (r.value <= target - 1) return finish(search->reconstruct(g.vertices(), r.value), true);
        return finish(std::move(incumbent), true);
    } catch (const detail::PartitionSearch::TimedOut&) {
        return finish(std::move(incumbent), false);
    }
}

/// Dispatches on the invariant's mode and piece kind.
inline PieceCertificate solve_invariant(const Graph& g, Invariant inv, const SolveConfig& cfg = {}) {
    return mode_of(inv) == CoverMode::Cover ? min_cover(g, kind_of(inv), cfg) : min_partition(g, kind_of(inv), cfg);
}

/// Minimum dominating set via set cover over closed neighbourhoods.
inline VertexSet min_dominating_set(const Graph& g, const Deadline& d = {}) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "dominating set requires a connected graph");
    std::vector<VertexSet> closed;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet s = g.neighbors(v);
        s.insert(v);
        closed.push_back(s);
    }
    SetCoverOptions opt;
    opt.deadline = d;
    auto res = exact_set_cover(g.vertices(), closed, opt);
    if (!res.optimal) throw Error(ErrorKind::Timeout, "dominating set search");
    VertexSet out;
    for (auto i : res.chosen) out.insert(i);
    return out;
}

inline bool dominates(const Graph& g, const VertexSet& u, const VertexSet& target) {
    VertexSet reach = u;
    u.for_each([&](Vertex v) { reach |= g.neighbors(v); });
    return target.is_subset_of(reach);
}

// ---------------------------------------------------------------------------
// Certificate validation

struct PieceCheck {
    std::size_t index = 0;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<PieceCheck> pieces;
    bool covers = false;
    bool disjoint = true;  // only checked in partition mode
    bool value_matches = false;
    VertexSet uncovered;

    bool ok() const {
        return covers && disjoint && value_matches &&
               std::all_of(pieces.begin(), pieces.end(), [](const PieceCheck& p) { return p.ok; });
    }
};

inline ValidationReport validate_certificate(const Graph& g, const PieceCertificate& cert) {
    ValidationReport rep;
    VertexSet seen;
    for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
        const auto& s = cert.pieces[i];
        PieceCheck c{i, false, {}};
        if (s.empty()) {
            c.detail = "empty piece";
        } else if (!s.is_subset_of(g.vertices())) {
            c.detail = "vertex out of range";
        } else if (!piece_shape(g, s, cert.kind)) {
            c.detail = "not an induced " + std::string(to_string(cert.kind));
        } else {
            c.ok = true;
        }
        if (cert.mode == CoverMode::Partition && s.intersects(seen)) rep.disjoint = false;
        seen |= s;
        rep.pieces.push_back(std::move(c));
    }
    rep.uncovered = g.vertices() - seen;
    rep.covers = rep.uncovered.empty();
    rep.value_matches = cert.value == cert.pieces.size();
    return rep;
}

}  // namespace coverlab

#endif  // COVERLAB_SOLVERS_HPP
