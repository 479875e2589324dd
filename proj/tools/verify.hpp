// Verification suites behind `coverlab verify`.

#ifndef COVERLAB_TOOLS_VERIFY_HPP
#define COVERLAB_TOOLS_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "coverlab/coverlab.hpp"

namespace coverlab::verify {

struct Line {
    std::string item;
    bool pass = false;
    std::string detail;
};

struct Options {
    std::size_t count = 0;  // 0: suite default
    std::uint64_t seed = 1;
    double timeout = 600;
    std::size_t jobs = 1;
};

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline SolveConfig config(const Options& o) {
    SolveConfig c;
    c.time_budget = o.timeout;
    c.jobs = o.jobs;
    return c;
}

/// Solves and reports; a timed-out solve is a failure line.
inline Line expect(const std::string& item, const Graph& g, Invariant inv, const Options& o,
                   const std::function<bool(std::size_t)>& ok, const std::string& want) {
    const auto cert = solve_invariant(g, inv, config(o));
    Line l{item, false, "got " + std::to_string(cert.value) + ", want " + want};
    if (!cert.optimal) {
        l.detail += " (timeout)";
        return l;
    }
    if (!validate_certificate(g, cert).ok()) {
        l.detail += " (certificate invalid)";
        return l;
    }
    l.pass = ok(cert.value);
    return l;
}

inline std::vector<Line> lemma41(const Options& o) {
    std::vector<Line> out;
    auto eq = [](std::size_t v) { return [v](std::size_t x) { return x == v; }; };
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto want = ceil_div(n, 2);
        out.push_back(expect("inspc(K_" + std::to_string(n) + ")", generate(Family::Complete, n), Invariant::inspc, o,
                             eq(want), std::to_string(want)));
        out.push_back(expect("inspc(S*_" + std::to_string(n) + ")", generate(Family::SStar, n), Invariant::inspc, o,
                             eq(want), std::to_string(want)));
    }
    for (std::size_t n = 2; n <= 6; ++n)
        out.push_back(expect("inspp(S~_" + std::to_string(n) + ")", generate(Family::STilde, n), Invariant::inspp, o,
                             eq(n + 1), std::to_string(n + 1)));
    for (std::size_t n = 2; n <= 10; ++n)
        out.push_back(expect("inpc(K_1," + std::to_string(n) + ")", generate(Family::Star, n), Invariant::inpc, o,
                             eq(ceil_div(n, 2)), std::to_string(ceil_div(n, 2))));
    for (std::size_t n = 2; n <= 12; ++n)
        out.push_back(expect("insc(P_" + std::to_string(n) + ")", generate(Family::Path, n), Invariant::insc, o,
                             eq(ceil_div(n, 3)), std::to_string(ceil_div(n, 3))));
    return out;
}

inline std::vector<Line> lemma42(const Options& o) {
    std::vector<Line> out;
    struct Row {
        Family f;
        const char* name;
        Invariant inv;
        std::function<std::size_t(std::size_t)> bound;
    };
    const std::vector<Row> rows{
        {Family::H1, "H1", Invariant::inspc, [](std::size_t m) { return ceil_div(m + 1, 2); }},
        {Family::H2, "H2", Invariant::inspc, [](std::size_t m) { return ceil_div(m + 1, 2); }},
        {Family::H3, "H3", Invariant::inspc, [](std::size_t m) { return m; }},
        {Family::H4, "H4", Invariant::inspp, [](std::size_t m) { return m; }},
        {Family::H5, "H5", Invariant::inspp, [](std::size_t m) { return m; }},
    };
    for (const auto& r : rows)
        for (std::size_t m = 2; m <= 4; ++m)
            for (std::size_t n = 3; n <= 4; ++n) {
                const auto b = r.bound(m);
                out.push_back(expect(std::string(to_string(r.inv)) + "(" + r.name + "_{" + std::to_string(m) + "," +
                                         std::to_string(n) + "}) >= " + std::to_string(b),
                                     generate(r.f, n, m), r.inv, o, [b](std::size_t x) { return x >= b; },
                                     ">= " + std::to_string(b)));
            }
    return out;
}

inline std::vector<Line> theorems(const Options&) {
    std::vector<Line> out;
    for (std::size_t n = 4; n <= 5; ++n)
        for (auto inv : kAllInvariants) {
            const auto got = characterize(theorem_target(inv, n), inv);
            out.push_back({"characterize(target_" + std::string(to_string(inv)) + "(" + std::to_string(n) + "))",
                           got == n, got ? "got " + std::to_string(*got) : "got none"});
        }
    {
        ForbiddenFamily p4{{generate(Family::Path, 4)}, "{P_4}"};
        const auto got = characterize(p4, Invariant::inspc);
        out.push_back({"characterize({P_4}, inspc) = none", !got, got ? "got " + std::to_string(*got) : "got none"});
    }
    for (auto inv : kAllInvariants)
        for (std::size_t n = 4; n < 7; ++n) {
            const auto a = theorem_target(inv, n), b = theorem_target(inv, n + 1);
            const bool up = family_leq(a, b), down = family_leq(b, a);
            out.push_back({"target_" + std::string(to_string(inv)) + "(" + std::to_string(n) + ") < target(" +
                               std::to_string(n + 1) + ")",
                           up && !down, std::string("leq ") + (up ? "yes" : "no") + ", reverse " + (down ? "yes" : "no")});
        }
    return out;
}

inline std::vector<Line> chains(const Options& o) {
    const std::size_t count = o.count ? o.count : 200;
    Rng rng(o.seed);
    std::size_t violations = 0, timeouts = 0;
    std::string first;
    for (std::size_t k = 0; k < count; ++k) {
        const Graph g = random_connected_graph(2, 10, 0.15, 0.75, rng);
        std::array<std::size_t, 8> val{};
        bool timed_out = false;
        for (auto inv : kAllInvariants) {
            const auto c = solve_invariant(g, inv, config(o));
            timed_out |= !c.optimal;
            val[static_cast<std::size_t>(inv)] = c.value;
        }
        if (timed_out) {
            ++timeouts;
            continue;
        }
        auto at = [&](Invariant i) { return val[static_cast<std::size_t>(i)]; };
        for (const auto& [a, b] : kChainInequalities)
            if (at(a) > at(b)) {
                if (!violations++) first = to_graph6(g) + ": " + std::string(to_string(a)) + " > " + std::string(to_string(b));
            }
        const std::size_t chi = chromatic_number(g);
        if (chi > 2 * at(Invariant::inspc) || at(Invariant::inspc) > at(Invariant::inspp))
            if (!violations++) first = to_graph6(g) + ": chi bound";
    }
    return {{"chains on " + std::to_string(count) + " random connected graphs (order <= 10)",
             violations == 0 && timeouts == 0,
             std::to_string(violations) + " violations, " + std::to_string(timeouts) + " timeouts" +
                 (first.empty() ? "" : "; first: " + first)}};
}

inline std::vector<Line> oracle(const Options& o) {
    const std::size_t count = o.count ? o.count : 5000;
    Rng rng(o.seed);
    std::size_t mismatches = 0;
    std::string first;
    for (std::size_t k = 0; k < count; ++k) {
        const Graph g = random_connected_graph(4, 7, 0.15, 0.85, rng);
        for (auto inv : kAllInvariants) {
            const auto c = solve_invariant(g, inv, config(o));
            const auto want = reference::invariant(g, inv);
            if (c.value != want || !c.optimal || !validate_certificate(g, c).ok())
                if (!mismatches++)
                    first = to_graph6(g) + " " + std::string(to_string(inv)) + ": " + std::to_string(c.value) +
                            " vs " + std::to_string(want);
        }
    }
    return {{"solvers vs subset-DP reference on " + std::to_string(count) + " random connected graphs (4-7 vertices)",
             mismatches == 0, std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : "; first: " + first)}};
}

inline std::vector<std::string> suite_names() { return {"lemma41", "lemma42", "theorems", "chains", "oracle"}; }

inline std::vector<Line> run(const std::string& suite, const Options& o) {
    if (suite == "lemma41") return lemma41(o);
    if (suite == "lemma42") return lemma42(o);
    if (suite == "theorems") return theorems(o);
    if (suite == "chains") return chains(o);
    if (suite == "oracle") return oracle(o);
    throw Error(ErrorKind::BadParameter, "unknown suite " + suite);
}

}  // namespace coverlab::verify

#endif  // COVERLAB_TOOLS_VERIFY_HPP
