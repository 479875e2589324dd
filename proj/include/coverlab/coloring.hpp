// Maximum clique / independent set and exact vertex colouring.

#ifndef COVERLAB_COLORING_HPP
#define COVERLAB_COLORING_HPP

#include <algorithm>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/generators.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

namespace detail {

// Branch and bound with greedy colour-class bounds over bitset candidates.
class CliqueSearch {
  public:
    CliqueSearch(const Graph& g, const Deadline& d) : g_(g), deadline_(d) {}

    VertexSet run(const VertexSet& within) {
        VertexSet r;
        expand(within, r, 0);
        return best_;
    }

  private:
    void expand(VertexSet p, VertexSet& r, std::size_t rsize) {
        if ((++nodes_ & 4095) == 0 && deadline_.expired()) throw Error(ErrorKind::Timeout, "clique search");
        if (p.empty()) {
            if (rsize > best_size_) best_size_ = rsize, best_ = r;
            return;
        }
        std::vector<Vertex> order;
        std::vector<std::size_t> colour;
        VertexSet uncoloured = p;
        for (std::size_t k = 1; !uncoloured.empty(); ++k) {
            VertexSet q = uncoloured;
            while (!q.empty()) {
                const Vertex v = q.first();
                q -= g_.neighbors(v);
                q.erase(v);
                uncoloured.erase(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (rsize + colour[i] <= best_size_) return;
            const Vertex v = order[i];
            r.insert(v);
            expand(p & g_.neighbors(v), r, rsize + 1);
            r.erase(v);
            p.erase(v);
        }
    }

    const Graph& g_;
    Deadline deadline_;
    VertexSet best_;
    std::size_t best_size_ = 0;
    std::size_t nodes_ = 0;
};

}  // namespace detail

inline VertexSet maximum_clique(const Graph& g, const VertexSet& within, const Deadline& d = {}) {
    return detail::CliqueSearch(g, d).run(within);
}
inline VertexSet maximum_clique(const Graph& g, const Deadline& d = {}) { return maximum_clique(g, g.vertices(), d); }

inline VertexSet maximum_independent_set(const Graph& g, const VertexSet& within, const Deadline& d = {}) {
    return maximum_clique(complement(g), within, d);
}
inline VertexSet maximum_independent_set(const Graph& g, const Deadline& d = {}) {
    return maximum_independent_set(g, g.vertices(), d);
}

inline std::size_t clique_number(const Graph& g, const Deadline& d = {}) { return maximum_clique(g, d).size(); }
inline std::size_t independence_number(const Graph& g, const Deadline& d = {}) {
    return maximum_independent_set(g, d).size();
}

struct Coloring {
    std::size_t count = 0;
    std::vector<std::size_t> color;  // per vertex, in [0, count)

    std::vector<VertexSet> classes() const {
        std::vector<VertexSet> out(count);
        for (Vertex v = 0; v < color.size(); ++v) out[color[v]].insert(v);
        return out;
    }
};

namespace detail {

// DSATUR branch and bound, seeded with a maximum clique on distinct colours.
class ColoringSearch {
  public:
    ColoringSearch(const Graph& g, const Deadline& d) : g_(g), deadline_(d), n_(g.order()) {}

    Coloring run() {
        if (n_ == 0) return {};
        const VertexSet clique = maximum_clique(g_, deadline_);
        lower_ = clique.size();
        best_ = greedy_dsatur();
        if (best_.count == lower_) return best_;

        colour_.assign(n_, kNone);
        forbidden_.assign(n_, std::vector<std::size_t>(n_ + 1, 0));
        std::size_t used = 0;
        for (Vertex v : clique) assign(v, used++);
        search(clique.size(), used);
        return best_;
    }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    Coloring greedy_dsatur() const {
        std::vector<std::size_t> col(n_, kNone);
        std::vector<VertexSet> seen(n_);
        std::size_t used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            Vertex pick = kNone;
            for (Vertex v = 0; v < n_; ++v) {
                if (col[v] != kNone) continue;
                if (pick == kNone || seen[v].size() > seen[pick].size() ||
                    (seen[v].size() == seen[pick].size() && g_.degree(v) > g_.degree(pick)))
                    pick = v;
            }
            std::size_t c = 0;
            while (seen[pick].contains(c)) ++c;
            col[pick] = c;
            used = std::max(used, c + 1);
            g_.neighbors(pick).for_each([&](Vertex w) { seen[w].insert(c); });
        }
        return {used, col};
    }

    void assign(Vertex v, std::size_t c) {
        colour_[v] = c;
        g_.neighbors(v).for_each([&](Vertex w) { ++forbidden_[w][c]; });
    }
    void unassign(Vertex v) {
        const std::size_t c = colour_[v];
        g_.neighbors(v).for_each([&](Vertex w) { --forbidden_[w][c]; });
        colour_[v] = kNone;
    }

    std::size_t saturation(Vertex v, std::size_t used) const {
        std::size_t s = 0;
        for (std::size_t c = 0; c < used; ++c) s += forbidden_[v][c] > 0;
        return s;
    }

    void search(std::size_t coloured, std::size_t used) {
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) throw Error(ErrorKind::Timeout, "colouring search");
        if (used >= best_.count) return;
        if (coloured == n_) {
            best_ = {used, colour_};
            return;
        }
        Vertex pick = kNone;
        std::size_t pick_sat = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != kNone) continue;
            const std::size_t s = saturation(v, used);
            if (pick == kNone || s > pick_sat || (s == pick_sat && g_.degree(v) > g_.degree(pick)))
                pick = v, pick_sat = s;
        }
        for (std::size_t c = 0; c <= used && c + 1 < best_.count; ++c) {
            if (c < used && forbidden_[pick][c] > 0) continue;
            assign(pick, c);
            search(coloured + 1, std::max(used, c + 1));
            unassign(pick);
            if (best_.count == lower_) return;
        }
    }

    const Graph& g_;
    Deadline deadline_;
    std::size_t n_;
    std::size_t lower_ = 0;
    Coloring best_;
    std::vector<std::size_t> colour_;
    std::vector<std::vector<std::size_t>> forbidden_;
    std::size_t nodes_ = 0;
};

}  // namespace detail

/// Optimal proper colouring. Throws Timeout when the deadline passes.
inline Coloring optimal_coloring(const Graph& g, const Deadline& d = {}) { return detail::ColoringSearch(g, d).run(); }

inline std::size_t chromatic_number(const Graph& g, const Deadline& d = {}) { return optimal_coloring(g, d).count; }

}  // namespace coverlab

#endif  // COVERLAB_COLORING_HPP
