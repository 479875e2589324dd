// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "coverlab/coverlab.hpp"
#include "oracle.hpp"

using namespace coverlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

oracle::Kind okind(PieceKind k) {
    switch (k) {
        case PieceKind::Star: return oracle::Kind::Star;
        case PieceKind::Path: return oracle::Kind::Path;
        case PieceKind::IsometricPath: return oracle::Kind::Isometric;
        case PieceKind::SPAny: return oracle::Kind::Any;
    }
    return oracle::Kind::Any;
}

// Exact value with a validated certificate, or nullopt on timeout/invalid.
std::optional<std::size_t> exact(const Graph& g, Invariant inv, Outcome& o, double budget = 600) {
    SolveConfig cfg;
    cfg.time_budget = budget;
    const auto c = solve_invariant(g, inv, cfg);
    if (!validate_certificate(g, c).ok()) {
        o.fail("invalid certificate for " + std::string(to_string(inv)) + " on " + g.label());
        return std::nullopt;
    }
    if (!c.optimal) {
        o.fail("timeout on " + std::string(to_string(inv)) + " of " + g.label());
        return std::nullopt;
    }
    return c.value;
}

Outcome closed_forms() {
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](const Graph& g, Invariant inv, std::size_t want) {
        ++checked;
        const auto v = exact(g, inv, o);
        if (v && *v != want)
            o.fail(std::string(to_string(inv)) + "(" + g.label() + ") = " + std::to_string(*v) + ", want " +
                   std::to_string(want));
    };
    for (std::size_t n = 2; n <= 8; ++n) {
        check(generate(Family::Complete, n), Invariant::inspc, ceil_div(n, 2));
        check(generate(Family::SStar, n), Invariant::inspc, ceil_div(n, 2));
    }
    for (std::size_t n = 2; n <= 6; ++n) check(generate(Family::STilde, n), Invariant::inspp, n + 1);
    for (std::size_t n = 2; n <= 10; ++n) check(generate(Family::Star, n), Invariant::inpc, ceil_div(n, 2));
    for (std::size_t n = 2; n <= 12; ++n) check(generate(Family::Path, n), Invariant::insc, ceil_div(n, 3));
    o.detail << checked << " closed-form values";
    return o;
}

Outcome lower_bounds() {
    Outcome o;
    std::size_t checked = 0;
    struct Row {
        Family f;
        Invariant inv;
        std::function<std::size_t(std::size_t)> bound;
    };
    const std::vector<Row> rows{{Family::H1, Invariant::inspc, [](std::size_t m) { return ceil_div(m + 1, 2); }},
                                {Family::H2, Invariant::inspc, [](std::size_t m) { return ceil_div(m + 1, 2); }},
                                {Family::H3, Invariant::inspc, [](std::size_t m) { return m; }},
                                {Family::H4, Invariant::inspp, [](std::size_t m) { return m; }},
                                {Family::H5, Invariant::inspp, [](std::size_t m) { return m; }}};
    std::ostringstream values;
    for (const auto& r : rows)
        for (std::size_t m = 2; m <= 4; ++m)
            for (std::size_t n = 3; n <= 4; ++n) {
                const Graph g = generate(r.f, n, m);
                ++checked;
                const auto v = exact(g, r.inv, o);
                if (v && *v < r.bound(m))
                    o.fail(std::string(to_string(r.inv)) + "(" + g.label() + ") = " + std::to_string(*v) + " < " +
                           std::to_string(r.bound(m)));
            }
    o.detail << checked << " instances, largest h3:4,4 on 28 vertices";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Rng rng(20240601);
    const std::size_t count = 5000;
    std::size_t comparisons = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const Graph g = random_connected_graph(4, 7, 0.15, 0.85, rng);
        for (auto kind : {PieceKind::Star, PieceKind::Path, PieceKind::IsometricPath, PieceKind::SPAny})
            for (bool partition : {false, true}) {
                const auto c = partition ? min_partition(g, kind) : min_cover(g, kind);
                const auto want = oracle::min_family(g, okind(kind), partition);
                ++comparisons;
                if (c.value != want || !c.optimal || !validate_certificate(g, c).ok())
                    o.fail(to_graph6(g) + " " + std::string(to_string(kind)) + (partition ? " partition " : " cover ") +
                           std::to_string(c.value) + " vs oracle " + std::to_string(want));
            }
    }
    o.detail << count << " graphs, " << comparisons << " comparisons";
    return o;
}

Outcome chains() {
    Outcome o;
    Rng rng(4242);
    std::size_t violations = 0;
    for (int k = 0; k < 200; ++k) {
        const Graph g = random_connected_graph(2, 10, 0.15, 0.75, rng);
        std::map<Invariant, std::size_t> v;
        for (auto inv : kAllInvariants)
            if (auto x = exact(g, inv, o)) v[inv] = *x;
        if (v.size() != kAllInvariants.size()) continue;
        for (const auto& [a, b] : kChainInequalities)
            if (v[a] > v[b]) {
                ++violations;
                o.fail(to_graph6(g) + ": " + std::string(to_string(a)) + " > " + std::string(to_string(b)));
            }
        const std::size_t chi = oracle::chromatic_number(g);
        if (!(chi <= 2 * v[Invariant::inspc] && v[Invariant::inspc] <= v[Invariant::inspp])) {
            ++violations;
            o.fail(to_graph6(g) + ": chi <= 2 inspc <= 2 inspp fails");
        }
    }
    o.detail << "200 graphs, " << violations << " violations";
    return o;
}

// Long sparse graphs: a path with short decorations, so that the layered
// construction runs its long branch on non-trivial layers.
Graph decorated_path(std::size_t length, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i < length; ++i) edges.emplace_back(i - 1, i);
    std::size_t order = length;
    std::uniform_int_distribution<int> what(0, 9);
    for (Vertex i = 1; i + 1 < length && order + 2 < 120; ++i) {
        switch (what(rng)) {
            case 0: edges.emplace_back(i, order++); break;  // pendant
            case 1:                                          // triangle on an edge
                edges.emplace_back(i, order);
                edges.emplace_back(i + 1, order++);
                break;
            case 2:  // pendant path of length 2
                edges.emplace_back(i, order);
                edges.emplace_back(order, order + 1);
                order += 2;
                break;
            default: break;
        }
    }
    return build_graph(order, edges, "decorated:" + std::to_string(length));
}

Outcome constructions() {
    Outcome o;
    Rng rng(777);
    std::size_t cover_runs = 0, part_runs = 0, long_runs = 0, exact_checks = 0;
    const auto cover_family = theorem_target(Invariant::inspc, 4);
    const auto part_family = theorem_target(Invariant::inspp, 4);

    auto check_paths = [&](const Graph& g, const PieceCertificate& c, const std::string& what) {
        for (const auto& p : c.pieces)
            if (piece_shape(g, p, PieceKind::Path) && !piece_shape(g, p, PieceKind::IsometricPath))
                o.fail(what + ": non-isometric path on " + to_graph6(g));
    };
    auto run = [&](const Graph& g, bool partition) {
        try {
            const auto t = partition ? sp_partition_construct(g, 4) : sp_cover_construct(g, 4);
            const std::string what = std::string(partition ? "partition" : "cover") + " " + g.label();
            if (!validate_certificate(g, t.result).ok()) o.fail(what + ": invalid certificate");
            check_paths(g, t.result, what);
            if (t.intermediate.value("branch", "") == "long") ++long_runs;
            if (g.order() <= 20) {
                ++exact_checks;
                const auto v = exact(g, partition ? Invariant::inspp : Invariant::inspc, o);
                if (v && t.result.value < *v) o.fail(what + ": construction below the exact value");
            }
        } catch (const Error& e) {
            o.fail(g.label() + ": " + e.what());
        }
        ++(partition ? part_runs : cover_runs);
    };

    std::vector<Graph> corpus;
    for (std::size_t k : {25, 30, 40}) corpus.push_back(generate(Family::Path, k));
    for (std::size_t k : {50, 61}) corpus.push_back(generate(Family::Cycle, k));
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<std::size_t> len(26, 60);
        corpus.push_back(decorated_path(len(rng), rng));
    }
    for (int i = 0; corpus.size() < 400 && i < 100000; ++i) {
        Graph g = random_connected_graph(6, 20, 0.08, 0.3, rng);
        corpus.push_back(std::move(g));
    }
    std::size_t cover_taken = 0, part_taken = 0;
    for (const auto& g : corpus) {
        if (cover_taken < 50 && is_family_free(g, cover_family)) {
            run(g, false);
            ++cover_taken;
        }
        if (part_taken < 50 && is_family_free(g, part_family)) {
            run(g, true);
            ++part_taken;
        }
    }
    if (cover_runs < 50 || part_runs < 50) o.fail("corpus too small after filtering");
    o.detail << cover_runs << " cover and " << part_runs << " partition constructions (" << long_runs
             << " on the long branch), " << exact_checks << " compared with exact values";
    return o;
}

Outcome neighbourhood_partitions() {
    Outcome o;
    Rng rng(2323);
    const ForbiddenFamily fam{{generate(Family::Complete, 4), generate(Family::STilde, 4)}, "{K4, S~4}"};
    std::size_t accepted = 0, depth2 = 0, max_size = 0;
    std::uniform_int_distribution<std::size_t> size(1, 15);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int tries = 0; accepted < 100 && tries < 200000; ++tries) {
        const std::size_t k = size(rng);
        Graph inner = random_graph(k, density(rng), rng);
        Graph g(k + 1, "neighbourhood:" + std::to_string(k));
        for (Vertex v = 1; v <= k; ++v) g.add_edge(0, v);
        for (const auto& [u, v] : inner.edges()) g.add_edge(u + 1, v + 1);
        if (!is_family_free(g, fam)) continue;
        ++accepted;
        try {
            const auto t = star_partition_neighborhood(g, 0, g.neighbors(0), 4);
            PieceCertificate c = t.result;
            if (!validate_certificate(g, c).ok()) o.fail(to_graph6(g) + ": invalid star partition");
            if (t.result.value > 9) o.fail(to_graph6(g) + ": size " + std::to_string(t.result.value) + " > 9");
            if (t.depth > 2) o.fail(to_graph6(g) + ": depth " + std::to_string(t.depth) + " > 2");
            depth2 += t.depth == 2;
            max_size = std::max(max_size, t.result.value);
        } catch (const Error& e) {
            o.fail(to_graph6(g) + ": " + e.what());
        }
    }
    if (accepted < 100) o.fail("only " + std::to_string(accepted) + " instances generated");
    o.detail << accepted << " instances, " << depth2 << " reach depth 2, largest partition " << max_size;
    return o;
}

Outcome ramsey_exact() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (auto [s, t, want] : {std::tuple{3u, 3u, 6u}, std::tuple{3u, 4u, 9u}}) {
        const auto b = ramsey(s, t);
        if (b.status != BoundStatus::Exact || b.value.str() != std::to_string(want))
            o.fail("R(" + std::to_string(s) + "," + std::to_string(t) + ") = " + b.value.str());
        const auto [r, witness] = ramsey_search(s, t);
        if (r != want || witness.order() != want - 1 || oracle::has_clique(witness, s, false) ||
            oracle::has_clique(witness, t, true))
            o.fail("bad witness for R(" + std::to_string(s) + "," + std::to_string(t) + ")");
        // independent vertex-by-vertex search
        if (!oracle::ramsey_graph_exists(s, t, want - 1) || oracle::ramsey_graph_exists(s, t, want))
            o.fail("oracle disagrees on R(" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << "R(3,3)=6, R(3,4)=9 by exhaustive search, cross-checked in " << secs << "s";
    return o;
}

Outcome characterizations() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t n = 4; n <= 5; ++n)
        for (auto inv : kAllInvariants) {
            ++checked;
            const auto got = characterize(theorem_target(inv, n), inv);
            if (got != n)
                o.fail("characterize(target_" + std::string(to_string(inv)) + "(" + std::to_string(n) + ")) = " +
                       (got ? std::to_string(*got) : "none"));
        }
    ++checked;
    if (characterize(ForbiddenFamily{{generate(Family::Path, 4)}, "{P4}"}, Invariant::inspc))
        o.fail("characterize({P4}, inspc) is not none");
    for (auto inv : kAllInvariants)
        for (std::size_t n = 4; n < 7; ++n) {
            ++checked;
            const auto a = theorem_target(inv, n), b = theorem_target(inv, n + 1);
            if (!family_leq(a, b) || family_leq(b, a))
                o.fail("targets of " + std::string(to_string(inv)) + " not strictly monotone at " + std::to_string(n));
        }
    o.detail << checked << " relations";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 closed forms on K_n, S*_n, S~_n, K_1,n, P_n", closed_forms},
        {"2 lower bounds on the H families", lower_bounds},
        {"3 oracle equivalence", oracle_equivalence},
        {"4 invariant chains and chromatic bound", chains},
        {"5 constructive validity", constructions},
        {"6 star partitions of a neighbourhood", neighbourhood_partitions},
        {"7 Ramsey exactness", ramsey_exact},
        {"8 characterization self-consistency", characterizations},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(),
                    secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
