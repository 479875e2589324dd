// Seeded random graphs for corpora and property checks.

#ifndef COVERLAB_RANDOM_GRAPHS_HPP
#define COVERLAB_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "coverlab/graph.hpp"

namespace coverlab {

using Rng = std::mt19937_64;

/// G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
    Graph g(n, "gnp:" + std::to_string(n));
    std::bernoulli_distribution coin(p);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Connected graph: a random recursive tree overlaid with G(n, p).
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    Graph g = random_graph(n, p, rng);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    g.set_label("connected:" + std::to_string(n));
    return g;
}

/// Connected graph with order drawn from [lo, hi] and density from [p_lo, p_hi].
inline Graph random_connected_graph(std::size_t lo, std::size_t hi, double p_lo, double p_hi, Rng& rng) {
    std::uniform_int_distribution<std::size_t> order(lo, hi);
    std::uniform_real_distribution<double> density(p_lo, p_hi);
    const std::size_t n = order(rng);
    return random_connected_graph(n, density(rng), rng);
}

}  // namespace coverlab

#endif  // COVERLAB_RANDOM_GRAPHS_HPP
