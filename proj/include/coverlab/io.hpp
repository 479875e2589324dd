// graph6 and edge-list graph formats; JSON views of certificates and traces.

#ifndef COVERLAB_IO_HPP
#define COVERLAB_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "coverlab/bounds.hpp"
#include "coverlab/constructive.hpp"
#include "coverlab/error.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/solvers.hpp"

namespace coverlab {

enum class GraphFormat { Graph6, EdgeList };

inline std::optional<GraphFormat> graph_format_from_string(std::string_view s) {
    if (s == "g6" || s == "graph6") return GraphFormat::Graph6;
    if (s == "edges" || s == "edgelist") return GraphFormat::EdgeList;
    return std::nullopt;
}

// --- graph6 ---------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int bits = 0, acc = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto fail = [](const std::string& why) -> Graph { throw Error(ErrorKind::FormatError, "graph6: " + why); };
    if (text.empty()) return fail("empty input");
    for (char c : text)
        if (c < 63 || c > 126) return fail("byte outside 63..126");
    std::size_t pos = 0, n = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) return fail("unsupported order encoding");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
        pos = 4;
    }
    if (n > kMaxVertices) return fail("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes) return fail("expected " + std::to_string(nbytes) + " data bytes");
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    for (; k < nbytes * 6; ++k)
        if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1) return fail("non-zero padding bits");
    return g;
}

// --- edge list: "p <order>" then one "u v" per line -------------------------

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "p " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

inline Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Graph> g;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) -> Graph {
        throw Error(ErrorKind::FormatError, "edge list line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        if (line[first] == 'p') {
            std::string tag;
            long long n = -1;
            if (g) return fail("repeated header");
            if (!(ls >> tag >> n) || tag != "p" || n < 0) return fail("bad header");
            std::string extra;
            if (ls >> extra) return fail("trailing text");
            if (static_cast<unsigned long long>(n) > kMaxVertices) return fail("order too large");
            g.emplace(static_cast<std::size_t>(n));
            continue;
        }
        if (!g) return fail("edge before the 'p <order>' header");
        long long u = -1, v = -1;
        if (!(ls >> u >> v)) return fail("expected 'u v'");
        std::string extra;
        if (ls >> extra) return fail("trailing text");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g->order() || static_cast<std::size_t>(v) >= g->order())
            return fail("vertex out of range");
        if (u == v) return fail("self-loop");
        g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!g) return fail("missing 'p <order>' header");
    return *g;
}

inline std::string serialize(const Graph& g, GraphFormat f) {
    return f == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

/// Parses either format; the edge-list header or a '#' comment selects edge list.
inline Graph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && (text[first] == 'p' || text[first] == '#')) return from_edge_list(text);
    auto line = text.substr(first == std::string_view::npos ? text.size() : first);
    if (auto nl = line.find('\n'); nl != std::string_view::npos) {
        if (line.find_first_not_of(" \t\r\n", nl) != std::string_view::npos)
            throw Error(ErrorKind::FormatError, "graph6: more than one graph in input");
        line = line.substr(0, nl);
    }
    return from_graph6(line);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

// --- JSON views ---------------------------------------------------------------

inline nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

inline nlohmann::json to_json(const PieceCertificate& c) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : c.pieces) pieces.push_back(to_json(p));
    return {{"mode", std::string(to_string(c.mode))},
            {"kind", std::string(to_string(c.kind))},
            {"value", c.value},
            {"optimal", c.optimal},
            {"pieces", pieces}};
}

inline PieceCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        PieceCertificate c;
        const std::string mode = j.at("mode");
        if (mode == "cover")
            c.mode = CoverMode::Cover;
        else if (mode == "partition")
            c.mode = CoverMode::Partition;
        else
            throw Error(ErrorKind::FormatError, "unknown mode " + mode);
        const auto kind = piece_kind_from_string(j.at("kind").get<std::string>());
        if (!kind) throw Error(ErrorKind::FormatError, "unknown piece kind");
        c.kind = *kind;
        for (const auto& p : j.at("pieces")) {
            VertexSet s;
            for (const auto& v : p) {
                const auto x = v.get<long long>();
                if (x < 0 || static_cast<unsigned long long>(x) >= kMaxVertices)
                    throw Error(ErrorKind::FormatError, "vertex out of range in certificate");
                s.insert(static_cast<Vertex>(x));
            }
            c.pieces.push_back(s);
        }
        c.value = j.value("value", c.pieces.size());
        c.optimal = j.value("optimal", false);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::FormatError, std::string("certificate: ") + e.what());
    }
}

inline nlohmann::json to_json(const ValidationReport& r) {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& p : r.pieces)
        if (!p.ok) bad.push_back({{"index", p.index}, {"detail", p.detail}});
    return {{"ok", r.ok()},
            {"covers", r.covers},
            {"disjoint", r.disjoint},
            {"value_matches", r.value_matches},
            {"uncovered", to_json(r.uncovered)},
            {"bad_pieces", bad}};
}

inline nlohmann::json to_json(const BoundValue& b) {
    nlohmann::json j{{"value", b.value.str()}, {"status", std::string(to_string(b.status))}, {"note", b.note}};
    if (!b.value.materialized()) j["log10"] = b.value.log10();
    return j;
}

inline nlohmann::json to_json(const AffineBound& a) {
    nlohmann::json j{{"constant", to_json(a.constant)},
                     {"coefficient_of_c_chi", to_json(a.coefficient)},
                     {"symbolic_in_c_chi", a.symbolic()},
                     {"status", std::string(to_string(a.status()))}};
    if (a.evaluated) j["evaluated"] = to_json(*a.evaluated);
    return j;
}

inline nlohmann::json to_json(const PaperConstants& pc) {
    return {{"n", pc.n},
            {"nu", to_json(pc.nu)},
            {"xi_n_n-2", to_json(pc.xi)},
            {"c1_inner", to_json(pc.c1_inner)},
            {"c1_outer", to_json(pc.c1_outer)},
            {"c2_inner", to_json(pc.c2_inner)},
            {"c2_outer", to_json(pc.c2_outer)},
            {"c_inspc", to_json(pc.c_inspc)},
            {"c_inspp", to_json(pc.c_inspp)}};
}

inline nlohmann::json to_json(const ConstructionTrace& t) {
    return {{"algorithm", t.algorithm},
            {"n", t.n},
            {"depth", t.depth},
            {"intermediate", t.intermediate},
            {"result", to_json(t.result)},
            {"claimed_bound", to_json(t.claimed_bound)}};
}

inline nlohmann::json graph_identity(const Graph& g) {
    return {{"order", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}};
}

}  // namespace coverlab

#endif  // COVERLAB_IO_HPP
