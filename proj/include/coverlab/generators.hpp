// Named graph families.
//
// Index layouts (all blocks in subscript order):
//   complete/path/cycle/empty : 0..n-1 (path and cycle in walking order)
//   star    K_{1,n}           : center 0, leaves 1..n
//   sstar, stilde, f2         : x1 = 0, y_i = i, z_i = n + i
//   f1, f4, f5                : x1 = 0, x2 = 1, y_i = 1 + i, z_i = 1 + n + i
//   f3                        : x_i = i - 1, y_i = n + i - 1, z_i = 2n + i - 1
//   kstar                     : clique 0..n-1, pendant of vertex i is n + i
//   h1..h5                    : u^(j)_i = (i-1)n + (j-1) for paths Q_1..Q_m, then
//                               h1: v_i, w_i interleaved per i; h2: v_i;
//                               h3: v_{i,j} row-major in (i, j); h4, h5: v_{i,1}, v_{i,2} per i

#ifndef COVERLAB_GENERATORS_HPP
#define COVERLAB_GENERATORS_HPP

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverlab/graph.hpp"

namespace coverlab {

enum class Family {
    Complete,
    Star,
    Path,
    Cycle,
    EmptyComplement,
    SStar,
    STilde,
    F1,
    F2,
    F3,
    F4,
    F5,
    KStar,
    H1,
    H2,
    H3,
    H4,
    H5,
};

struct NamedGraphSpec {
    Family family = Family::Complete;
    std::size_t n = 1;
    std::size_t m = 0;  // H-families only

    friend bool operator==(const NamedGraphSpec&, const NamedGraphSpec&) = default;
};

namespace detail {

struct FamilyName {
    Family family;
    std::string_view name;
    bool two_params;
};

inline constexpr std::array<FamilyName, 18> kFamilyNames{{
    {Family::Complete, "k", false},     {Family::Star, "star", false},   {Family::Path, "path", false},
    {Family::Cycle, "cycle", false},    {Family::EmptyComplement, "empty", false},
    {Family::SStar, "sstar", false},    {Family::STilde, "stilde", false}, {Family::F1, "f1", false},
    {Family::F2, "f2", false},          {Family::F3, "f3", false},       {Family::F4, "f4", false},
    {Family::F5, "f5", false},          {Family::KStar, "kstar", false}, {Family::H1, "h1", true},
    {Family::H2, "h2", true},           {Family::H3, "h3", true},        {Family::H4, "h4", true},
    {Family::H5, "h5", true},
}};

inline std::optional<std::size_t> parse_count(std::string_view s) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

inline bool is_h_family(Family f) {
    return f == Family::H1 || f == Family::H2 || f == Family::H3 || f == Family::H4 || f == Family::H5;
}

}  // namespace detail

inline std::string_view family_name(Family f) {
    for (const auto& e : detail::kFamilyNames)
        if (e.family == f) return e.name;
    return "?";
}

/// "sstar:3", "h1:2,3" (m then n), "k:5". Aliases: complete, p, c, k1n.
inline NamedGraphSpec parse_named_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected family:params in '" + std::string(text) + "'");
    std::string_view name = text.substr(0, colon);
    std::string_view params = text.substr(colon + 1);
    if (name == "complete") name = "k";
    if (name == "p") name = "path";
    if (name == "c") name = "cycle";
    if (name == "k1n") name = "star";
    for (const auto& e : detail::kFamilyNames) {
        if (e.name != name) continue;
        NamedGraphSpec spec{e.family, 0, 0};
        if (e.two_params) {
            auto comma = params.find(',');
            if (comma == std::string_view::npos) throw Error(ErrorKind::ParseError, "family '" + std::string(name) + "' takes m,n");
            auto m = detail::parse_count(params.substr(0, comma));
            auto n = detail::parse_count(params.substr(comma + 1));
            if (!m || !n) throw Error(ErrorKind::ParseError, "bad parameters '" + std::string(params) + "'");
            spec.m = *m;
            spec.n = *n;
        } else {
            auto n = detail::parse_count(params);
            if (!n) throw Error(ErrorKind::ParseError, "bad parameter '" + std::string(params) + "'");
            spec.n = *n;
        }
        return spec;
    }
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) + "'");
}

inline std::string to_string(const NamedGraphSpec& s) {
    std::string out(family_name(s.family));
    out += ':';
    if (detail::is_h_family(s.family)) out += std::to_string(s.m) + ",";
    out += std::to_string(s.n);
    return out;
}

namespace detail {

inline void require(bool ok, const NamedGraphSpec& s, std::string_view range) {
    if (!ok) throw Error(ErrorKind::BadParameter, to_string(s) + " requires " + std::string(range));
}

inline void add_path(Graph& g, Vertex first, std::size_t len) {
    for (std::size_t i = 1; i < len; ++i) g.add_edge(first + i - 1, first + i);
}

// Two-legged obstructions; `x_count` x-vertices precede the y and z legs.
inline Graph legs(std::size_t x_count, std::size_t n, std::string label) {
    Graph g(x_count + 2 * n, std::move(label));
    add_path(g, x_count, n);
    add_path(g, x_count + n, n);
    return g;
}

inline Graph h_base(std::size_t m, std::size_t n, std::size_t extra, std::string label) {
    Graph g(m * n + extra, std::move(label));
    for (std::size_t i = 0; i < m; ++i) add_path(g, i * n, n);
    return g;
}

}  // namespace detail

inline Graph generate(const NamedGraphSpec& s) {
    using detail::require;
    const std::size_t n = s.n, m = s.m;
    const std::string label = to_string(s);
    auto fits = [&](std::size_t order) {
        require(order <= kMaxVertices, s, "order <= " + std::to_string(kMaxVertices));
    };
    switch (s.family) {
        case Family::Complete: {
            require(n >= 1, s, "n >= 1");
            fits(n);
            Graph g(n, label);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::Star: {
            require(n >= 1, s, "n >= 1");
            fits(n + 1);
            Graph g(n + 1, label);
            for (Vertex v = 1; v <= n; ++v) g.add_edge(0, v);
            return g;
        }
        case Family::Path: {
            require(n >= 1, s, "n >= 1");
            fits(n);
            Graph g(n, label);
            detail::add_path(g, 0, n);
            return g;
        }
        case Family::Cycle: {
            require(n >= 3, s, "n >= 3");
            fits(n);
            Graph g(n, label);
            detail::add_path(g, 0, n);
            g.add_edge(n - 1, 0);
            return g;
        }
        case Family::EmptyComplement: {
            require(n >= 1, s, "n >= 1");
            fits(n);
            return Graph(n, label);
        }
        case Family::SStar:
        case Family::STilde: {
            require(n >= 2, s, "n >= 2");
            fits(2 * n + 1);
            Graph g(2 * n + 1, label);
            for (std::size_t i = 1; i <= n; ++i) {
                g.add_edge(0, i);
                g.add_edge(i, n + i);
                if (s.family == Family::STilde) g.add_edge(0, n + i);
            }
            return g;
        }
        case Family::F1:
        case Family::F4:
        case Family::F5: {
            require(n >= 2, s, "n >= 2");
            fits(2 * n + 2);
            Graph g = detail::legs(2, n, label);
            const Vertex y1 = 2, z1 = 2 + n;
            if (s.family == Family::F1) {
                g.add_edge(0, 1);
                g.add_edge(0, y1);
                g.add_edge(0, z1);
            } else {
                for (Vertex x : {Vertex{0}, Vertex{1}}) {
                    g.add_edge(x, y1);
                    g.add_edge(x, z1);
                }
                if (s.family == Family::F5) g.add_edge(0, 1);
            }
            return g;
        }
        case Family::F2: {
            require(n >= 2, s, "n >= 2");
            fits(2 * n + 1);
            Graph g = detail::legs(1, n, label);
            g.add_edge(0, 1);
            g.add_edge(0, 1 + n);
            g.add_edge(1, 1 + n);
            return g;
        }
        case Family::F3: {
            require(n >= 2, s, "n >= 2");
            fits(3 * n);
            Graph g = detail::legs(n, n, label);
            for (Vertex x = 0; x < n; ++x) {
                g.add_edge(x, n);
                g.add_edge(x, 2 * n);
            }
            return g;
        }
        case Family::KStar: {
            require(n >= 1, s, "n >= 1");
            fits(2 * n);
            Graph g(2 * n, label);
            for (Vertex u = 0; u < n; ++u) {
                g.add_edge(u, n + u);
                for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
            }
            return g;
        }
        case Family::H1:
        case Family::H2:
        case Family::H3:
        case Family::H4:
        case Family::H5: {
            require(m >= 2 && n >= 3, s, "m >= 2 and n >= 3");
            auto first = [&](std::size_t i) { return (i - 1) * n; };     // u^(1)_i
            auto last = [&](std::size_t i) { return (i - 1) * n + n - 1; };  // u^(n)_i
            const std::size_t base = m * n;
            if (s.family == Family::H1) {
                fits(base + 2 * (m - 1));
                Graph g = detail::h_base(m, n, 2 * (m - 1), label);
                for (std::size_t i = 1; i < m; ++i) {
                    const Vertex v = base + 2 * (i - 1), w = v + 1;
                    g.add_edge(v, w);
                    g.add_edge(v, last(i));
                    g.add_edge(v, first(i + 1));
                }
                return g;
            }
            if (s.family == Family::H2) {
                fits(base + (m - 1));
                Graph g = detail::h_base(m, n, m - 1, label);
                for (std::size_t i = 1; i < m; ++i) {
                    const Vertex v = base + (i - 1);
                    g.add_edge(v, last(i));
                    g.add_edge(v, first(i + 1));
                    g.add_edge(last(i), first(i + 1));
                }
                return g;
            }
            const std::size_t per = s.family == Family::H3 ? m : 2;
            fits(base + (m - 1) * per);
            Graph g = detail::h_base(m, n, (m - 1) * per, label);
            for (std::size_t i = 1; i < m; ++i) {
                for (std::size_t j = 0; j < per; ++j) {
                    const Vertex v = base + (i - 1) * per + j;
                    g.add_edge(v, last(i));
                    g.add_edge(v, first(i + 1));
                }
                if (s.family == Family::H5) g.add_edge(base + (i - 1) * 2, base + (i - 1) * 2 + 1);
            }
            return g;
        }
    }
    throw Error(ErrorKind::BadParameter, "unhandled family");
}

inline Graph generate(Family f, std::size_t n, std::size_t m = 0) { return generate(NamedGraphSpec{f, n, m}); }
inline Graph generate(std::string_view spec) { return generate(parse_named_spec(spec)); }

inline Graph complement(const Graph& g) {
    Graph c(g.order(), g.label().empty() ? std::string{} : "complement(" + g.label() + ")");
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

}  // namespace coverlab

#endif  // COVERLAB_GENERATORS_HPP
