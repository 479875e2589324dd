// Induced subgraph containment, forbidden-family freeness and the <= order
// between families.

#ifndef COVERLAB_ISOMORPHISM_HPP
#define COVERLAB_ISOMORPHISM_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/generators.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/invariant.hpp"

namespace coverlab {

/// Injective map from pattern vertices to host vertices; `map[p]` is the image of p.
struct Embedding {
    std::vector<Vertex> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (e.map.size() != pattern.order()) return false;
    VertexSet image;
    for (Vertex v : e.map) {
        if (v >= host.order() || image.contains(v)) return false;
        image.insert(v);
    }
    for (Vertex p = 0; p < pattern.order(); ++p)
        for (Vertex q = p + 1; q < pattern.order(); ++q)
            if (pattern.adjacent(p, q) != host.adjacent(e.map[p], e.map[q])) return false;
    return true;
}

namespace detail {

class InducedMatcher {
  public:
    InducedMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
        host_order_.resize(host.order());
        std::iota(host_order_.begin(), host_order_.end(), Vertex{0});
        std::stable_sort(host_order_.begin(), host_order_.end(),
                         [&](Vertex a, Vertex b) { return host.degree(a) > host.degree(b); });
        order_pattern();
    }

    std::optional<Embedding> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        map_.assign(pattern_.order(), kMaxVertices);
        if (!extend(0, VertexSet{})) return std::nullopt;
        return Embedding{map_};
    }

  private:
    // Greedy connectivity-first order: each next vertex has the most already
    // placed neighbours (ties: higher degree, then lower index).
    void order_pattern() {
        const std::size_t k = pattern_.order();
        std::vector<bool> placed(k, false);
        std::vector<std::size_t> links(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t best = k;
            for (Vertex v = 0; v < k; ++v) {
                if (placed[v]) continue;
                if (best == k || links[v] > links[best] ||
                    (links[v] == links[best] && pattern_.degree(v) > pattern_.degree(best)))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            pattern_.neighbors(best).for_each([&](Vertex w) { ++links[w]; });
        }
    }

    bool extend(std::size_t depth, const VertexSet& used) {
        if (depth == order_.size()) return true;
        const Vertex p = order_[depth];
        VertexSet cand = host_.vertices() - used;
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex q = order_[i];
            if (pattern_.adjacent(p, q))
                cand &= host_.neighbors(map_[q]);
            else
                cand -= host_.neighbors(map_[q]);
        }
        if (cand.empty()) return false;
        const std::size_t need = pattern_.degree(p);
        for (Vertex h : host_order_) {
            if (host_.degree(h) < need) break;
            if (!cand.contains(h)) continue;
            map_[p] = h;
            VertexSet u = used;
            u.insert(h);
            if (extend(depth + 1, u)) return true;
        }
        map_[p] = kMaxVertices;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> host_order_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
};

}  // namespace detail

/// An induced copy of `pattern` in `host`, if any. Candidates are tried in
/// host-degree-descending order, so the returned embedding is deterministic.
inline std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
    return detail::InducedMatcher(host, pattern).run();
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && a.degree_sequence() == b.degree_sequence() &&
           contains_induced(a, b).has_value();
}

struct ForbiddenFamily {
    std::vector<Graph> members;
    std::string name;
};

struct FamilyHit {
    std::size_t member;
    Embedding embedding;
};

/// The first member (in family order) that embeds induced into g.
inline std::optional<FamilyHit> find_forbidden(const Graph& g, const ForbiddenFamily& family) {
    for (std::size_t i = 0; i < family.members.size(); ++i)
        if (auto e = contains_induced(g, family.members[i])) return FamilyHit{i, *e};
    return std::nullopt;
}

inline bool is_family_free(const Graph& g, const ForbiddenFamily& family) { return !find_forbidden(g, family); }

/// f1 <= f2: every member of f2 contains an induced copy of some member of f1.
inline bool family_leq(const ForbiddenFamily& f1, const ForbiddenFamily& f2) {
    for (const auto& big : f2.members) {
        bool hit = false;
        for (const auto& small : f1.members) {
            if (small.order() <= big.order() && contains_induced(big, small)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

/// Characterizing family of the invariant at parameter n.
inline ForbiddenFamily theorem_target(Invariant inv, std::size_t n) {
    std::vector<Family> fams;
    switch (inv) {
        case Invariant::inspc: fams = {Family::Complete, Family::SStar, Family::F1, Family::F2, Family::F3}; break;
        case Invariant::inspp:
            fams = {Family::Complete, Family::SStar, Family::STilde, Family::F1, Family::F2, Family::F4, Family::F5};
            break;
        case Invariant::insc: fams = {Family::Complete, Family::SStar, Family::Path}; break;
        case Invariant::insp: fams = {Family::Complete, Family::SStar, Family::STilde, Family::Path}; break;
        case Invariant::inpc:
        case Invariant::ispc: fams = {Family::Complete, Family::Star, Family::F1, Family::F2}; break;
        case Invariant::inpp:
        case Invariant::ispp:
            fams = {Family::Complete, Family::Star, Family::F1, Family::F2, Family::F4, Family::F5};
            break;
    }
    ForbiddenFamily f;
    f.name = std::string(to_string(inv)) + ":" + std::to_string(n);
    for (auto fam : fams) f.members.push_back(generate(fam, n));
    return f;
}

/// Search cutoff for characterize: max(4, p + 2) with p the largest member order.
inline std::size_t characterize_cutoff(const ForbiddenFamily& family) {
    std::size_t p = 0;
    for (const auto& g : family.members) p = std::max(p, g.order());
    return std::max<std::size_t>(4, p + 2);
}

/// Least n in [4, cutoff] with family <= theorem_target(inv, n); nullopt means
/// "none up to the cutoff".
inline std::optional<std::size_t> characterize(const ForbiddenFamily& family, Invariant inv) {
    if (family.members.empty()) throw Error(ErrorKind::BadInput, "characterize needs a non-empty family");
    for (std::size_t i = 0; i < family.members.size(); ++i)
        if (!is_connected(family.members[i]))
            throw Error(ErrorKind::DisconnectedMember,
                        "member " + std::to_string(i) +
                            (family.members[i].label().empty() ? "" : " (" + family.members[i].label() + ")") +
                            " is disconnected");
    const std::size_t cutoff = characterize_cutoff(family);
    for (std::size_t n = 4; n <= cutoff; ++n)
        if (family_leq(family, theorem_target(inv, n))) return n;
    return std::nullopt;
}

}  // namespace coverlab

#endif  // COVERLAB_ISOMORPHISM_HPP
