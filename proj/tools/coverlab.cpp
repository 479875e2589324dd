// coverlab command-line interface.
//
// Exit codes: 0 ok, 2 validation/verification failure, 3 timeout, 4 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coverlab/coverlab.hpp"
#include "verify.hpp"

namespace {

using namespace coverlab;
using nlohmann::json;

enum Exit : int { kOk = 0, kFailed = 2, kTimeout = 3, kInputError = 4 };

struct Common {
    std::string format = "g6";
    double timeout = 3600;
    std::size_t jobs = 1;
    std::uint64_t seed = 1;
    std::string out;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::BadInput, "cannot write " + c.out);
    f << text;
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

GraphFormat format_of(const Common& c) {
    auto f = graph_format_from_string(c.format);
    if (!f) throw Error(ErrorKind::BadParameter, "unknown format " + c.format);
    return *f;
}

SolveConfig solve_config(const Common& c) {
    SolveConfig cfg;
    cfg.time_budget = c.timeout;
    cfg.jobs = c.jobs;
    return cfg;
}

// "inspc:4" names a theorem target; otherwise '+'-separated generator specs.
ForbiddenFamily parse_family(const std::string& text) {
    if (auto colon = text.find(':'); colon != std::string::npos)
        if (auto inv = invariant_from_string(text.substr(0, colon))) {
            const auto n = detail::parse_count(text.substr(colon + 1));
            if (!n) throw Error(ErrorKind::ParseError, "bad parameter in '" + text + "'");
            return theorem_target(*inv, *n);
        }
    ForbiddenFamily f;
    f.name = text;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, '+');) f.members.push_back(generate(item));
    if (f.members.empty()) throw Error(ErrorKind::ParseError, "empty family");
    return f;
}

Invariant parse_invariant(const std::string& s) {
    auto inv = invariant_from_string(s);
    if (!inv) throw Error(ErrorKind::ParseError, "unknown invariant '" + s + "'");
    return *inv;
}

json family_json(const ForbiddenFamily& f) {
    json members = json::array();
    for (const auto& m : f.members) members.push_back(m.label());
    return {{"name", f.name}, {"members", members}};
}

int cmd_gen(const Common& c, const std::string& spec, double density) {
    Graph g;
    if (spec.rfind("random:", 0) == 0) {
        const auto n = detail::parse_count(spec.substr(7));
        if (!n) throw Error(ErrorKind::ParseError, "bad parameter in '" + spec + "'");
        Rng rng(c.seed);
        g = random_connected_graph(*n, density, rng);
    } else {
        g = generate(spec);
    }
    emit(c, serialize(g, format_of(c)));
    return kOk;
}

int cmd_solve(const Common& c, const std::string& file, const std::vector<std::string>& invs) {
    const Graph g = read_graph_file(file);
    std::vector<Invariant> wanted;
    if (invs.empty())
        wanted.assign(kAllInvariants.begin(), kAllInvariants.end());
    else
        for (const auto& s : invs) wanted.push_back(parse_invariant(s));
    json report{{"graph", graph_identity(g)}};
    json values = json::object();
    std::map<Invariant, std::size_t> exact;
    bool timed_out = false, invalid = false;
    const auto cfg = solve_config(c);
    for (auto inv : wanted) {
        const auto cert = solve_invariant(g, inv, cfg);
        const auto rep = validate_certificate(g, cert);
        invalid |= !rep.ok();
        timed_out |= !cert.optimal;
        if (cert.optimal) exact[inv] = cert.value;
        values[std::string(to_string(inv))] = {{"value", cert.value},
                                               {"status", cert.optimal ? "exact" : "timeout-incumbent"},
                                               {"certificate", to_json(cert)},
                                               {"valid", rep.ok()}};
    }
    report["invariants"] = values;
    json checks = json::array();
    bool check_failed = false;
    for (const auto& [a, b] : kChainInequalities)
        if (exact.count(a) && exact.count(b)) {
            const bool ok = exact[a] <= exact[b];
            check_failed |= !ok;
            checks.push_back({{"check", std::string(to_string(a)) + " <= " + std::string(to_string(b))}, {"ok", ok}});
        }
    if (exact.count(Invariant::inspc) && g.order() > 0) {
        try {
            const auto chi = chromatic_number(g, cfg.deadline());
            const bool ok = chi <= 2 * exact[Invariant::inspc];
            check_failed |= !ok;
            checks.push_back({{"check", "chi <= 2 inspc"}, {"chi", chi}, {"ok", ok}});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Timeout) throw;
            timed_out = true;
            checks.push_back({{"check", "chi <= 2 inspc"}, {"ok", nullptr}, {"detail", "timeout"}});
        }
    }
    report["cross_checks"] = checks;
    emit(c, report);
    if (invalid || check_failed) return kFailed;
    return timed_out ? kTimeout : kOk;
}

int cmd_check_free(const Common& c, const std::string& file, const std::string& family) {
    const Graph g = read_graph_file(file);
    const auto f = parse_family(family);
    json out{{"family", family_json(f)}};
    if (auto hit = find_forbidden(g, f)) {
        out["free"] = false;
        out["witness"] = {{"member", f.members[hit->member].label()}, {"embedding", hit->embedding.map}};
        emit(c, out);
        return kFailed;
    }
    out["free"] = true;
    emit(c, out);
    return kOk;
}

int cmd_check_order(const Common& c, const std::string& a, const std::string& b) {
    const auto fa = parse_family(a), fb = parse_family(b);
    const bool leq = family_leq(fa, fb);
    emit(c, json{{"lhs", family_json(fa)}, {"rhs", family_json(fb)}, {"leq", leq}});
    return leq ? kOk : kFailed;
}

int cmd_characterize(const Common& c, const std::string& family, const std::string& inv) {
    const auto f = parse_family(family);
    const auto i = parse_invariant(inv);
    const auto n = characterize(f, i);
    emit(c, json{{"family", family_json(f)},
                 {"invariant", std::string(to_string(i))},
                 {"cutoff", characterize_cutoff(f)},
                 {"n", n ? json(*n) : json(nullptr)}});
    return kOk;
}

int cmd_construct(const Common& c, const std::string& file, const std::string& mode, std::size_t n, std::size_t root,
                  const std::string& c_chi) {
    const Graph g = read_graph_file(file);
    ConstructOptions opt;
    opt.root = root;
    if (!c_chi.empty()) opt.c_chi = BigInt(c_chi);
    ConstructionTrace t;
    if (mode == "cover")
        t = sp_cover_construct(g, n, opt);
    else if (mode == "partition")
        t = sp_partition_construct(g, n, opt);
    else
        throw Error(ErrorKind::BadParameter, "mode must be cover or partition");
    const auto rep = validate_certificate(g, t.result);
    json j = to_json(t);
    j["validation"] = to_json(rep);
    emit(c, j);
    return rep.ok() ? kOk : kFailed;
}

int cmd_convert(const Common& c, const std::string& file, const std::string& cert_file, const std::string& to,
                std::size_t n) {
    const Graph g = read_graph_file(file);
    std::ifstream in(cert_file);
    if (!in) throw Error(ErrorKind::FormatError, "cannot open " + cert_file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::FormatError, std::string("certificate: ") + e.what());
    }
    // Accept a bare certificate or anything carrying one under "result"/"certificate".
    if (j.contains("result")) j = j["result"];
    if (j.contains("certificate")) j = j["certificate"];
    const auto cert = certificate_from_json(j);
    PieceCertificate out;
    if (to == "star")
        out = cover_to_star_cover(g, cert, n);
    else if (to == "path")
        out = cover_to_path_cover(g, cert, n);
    else
        throw Error(ErrorKind::BadParameter, "--to must be star or path");
    const auto rep = validate_certificate(g, out);
    emit(c, json{{"certificate", to_json(out)}, {"validation", to_json(rep)}});
    return rep.ok() ? kOk : kFailed;
}

int cmd_bounds(const Common& c, const std::string& what, const std::vector<std::size_t>& args, const std::string& c_chi) {
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw Error(ErrorKind::BadParameter, "bounds " + what + " takes " + std::to_string(k) + " arguments");
    };
    json out;
    if (what == "ramsey") {
        need(2);
        if (args[0] < 1 || args[1] < 1) throw Error(ErrorKind::BadParameter, "ramsey needs s, t >= 1");
        out = to_json(ramsey(args[0], args[1]));
        out["s"] = args[0];
        out["t"] = args[1];
    } else if (what == "xi") {
        need(2);
        out = to_json(xi_value(args[0], args[1]));
        out["n"] = args[0];
        out["i"] = args[1];
    } else if (what == "alpha") {
        need(2);
        out = to_json(alpha_value(args[0], args[1]));
        out["n"] = args[0];
        out["h"] = args[1];
    } else if (what == "constants") {
        need(1);
        std::optional<BigInt> chi;
        if (!c_chi.empty()) chi = BigInt(c_chi);
        out = to_json(paper_constants(args[0], chi));
    } else {
        throw Error(ErrorKind::BadParameter, "unknown bounds query " + what);
    }
    emit(c, out);
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, std::size_t count) {
    verify::Options o;
    o.count = count;
    o.seed = c.seed;
    o.timeout = c.timeout;
    o.jobs = c.jobs;
    const auto lines = verify::run(suite, o);
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& l : lines) {
        failed += !l.pass;
        os << (l.pass ? "PASS " : "FAIL ") << suite << ": " << l.item << " (" << l.detail << ")\n";
    }
    os << suite << ": " << lines.size() - failed << "/" << lines.size() << " passed\n";
    emit(c, os.str());
    return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverlab: induced star/path cover and partition invariants"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "graph format: g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
        sub->add_option("--timeout", common.timeout, "time budget in seconds")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--out", common.out, "write output to this path");
    };

    std::string spec, file, family, family2, invariant, mode = "cover", to, cert_file, suite, what, c_chi;
    std::vector<std::string> invariants;
    std::vector<std::size_t> numbers;
    std::size_t n = 4, root = 0, count = 0;
    double density = 0.3;

    auto* gen = app.add_subcommand("gen", "generate a named graph (family:params) or random:<n>");
    gen->add_option("spec", spec)->required();
    gen->add_option("--density", density, "edge probability for random:<n>")->check(CLI::Range(0.0, 1.0));
    add_common(gen);

    auto* solve = app.add_subcommand("solve", "exact invariant values with certificates");
    solve->add_option("graph", file)->required();
    solve->add_option("invariants", invariants, "subset of inspc inspp insc insp inpc inpp ispc ispp");
    add_common(solve);

    auto* free = app.add_subcommand("check-free", "test freeness against a family (inspc:4 or spec+spec+...)");
    free->add_option("graph", file)->required();
    free->add_option("family", family)->required();
    add_common(free);

    auto* order = app.add_subcommand("check-order", "test the relation F1 <= F2");
    order->add_option("lhs", family)->required();
    order->add_option("rhs", family2)->required();
    add_common(order);

    auto* charz = app.add_subcommand("characterize", "least n with family <= target(invariant, n)");
    charz->add_option("family", family)->required();
    charz->add_option("invariant", invariant)->required();
    add_common(charz);

    auto* cons = app.add_subcommand("construct", "run the SP-cover/partition construction");
    cons->add_option("graph", file)->required();
    cons->add_option("--mode", mode)->check(CLI::IsMember({"cover", "partition"}));
    cons->add_option("--n", n)->check(CLI::Range(4, 64));
    cons->add_option("--root", root);
    cons->add_option("--c-chi", c_chi, "numeric value for the colouring constant");
    add_common(cons);

    auto* conv = app.add_subcommand("convert-cover", "turn an SP cover into a star or path cover");
    conv->add_option("graph", file)->required();
    conv->add_option("certificate", cert_file)->required();
    conv->add_option("--to", to)->required()->check(CLI::IsMember({"star", "path"}));
    conv->add_option("--n", n)->check(CLI::Range(1, 256));
    add_common(conv);

    auto* bounds = app.add_subcommand("bounds", "ramsey s t | xi n i | alpha n h | constants n");
    bounds->add_option("query", what)->required();
    bounds->add_option("args", numbers);
    bounds->add_option("--c-chi", c_chi, "numeric value for the colouring constant");
    add_common(bounds);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--count", count, "random instances (chains, oracle)");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gen) return cmd_gen(common, spec, density);
        if (*solve) return cmd_solve(common, file, invariants);
        if (*free) return cmd_check_free(common, file, family);
        if (*order) return cmd_check_order(common, family, family2);
        if (*charz) return cmd_characterize(common, family, invariant);
        if (*cons) return cmd_construct(common, file, mode, n, root, c_chi);
        if (*conv) return cmd_convert(common, file, cert_file, to, n);
        if (*bounds) return cmd_bounds(common, what, numbers, c_chi);
        if (*ver) return cmd_verify(common, suite, count);
    } catch (const FreenessViolated& e) {
        std::cerr << json{{"error", "FreenessViolated"}, {"member", e.member()}, {"embedding", e.embedding()}}.dump()
                  << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Timeout: return kTimeout;
            case ErrorKind::InternalInvariantBroken: return kFailed;
            default: return kInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
