// gpg: exact general position invariants and Sierpinski-product extremes.
//
// Subcommands: gp, xi, product, maps, gps, predict, verify, gen.
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 finished without proving the result exhaustive/optimal.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gpgraph/corpus.hpp"
#include "gpgraph/formats.hpp"
#include "gpgraph/generators.hpp"
#include "gpgraph/io_json.hpp"
#include "gpgraph/sierpinski_gp.hpp"
#include "gpgraph/verify.hpp"

namespace {

using nlohmann::json;
using namespace gpgraph;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotExhaustive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_jobs() {
    if (const char* env = std::getenv("GPGRAPH_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (...) {
        }
        throw UsageError("GPGRAPH_JOBS must be a positive integer");
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

// Generator shorthand: petersen | complete:n | path:n | cycle:n | star:n |
// bipartite:a,b | tree:n,seed | chain:k,l | fixture13 | fixture11 | demo-k4
Graph generate(const std::string& shorthand) {
    std::string name = shorthand;
    std::vector<int> args;
    if (auto pos = shorthand.find(':'); pos != std::string::npos) {
        name = shorthand.substr(0, pos);
        try {
            args = parse_int_list(shorthand.substr(pos + 1));
        } catch (...) {
            throw UsageError("bad generator parameters in '" + shorthand + "'");
        }
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw UsageError("generator '" + name + "' takes " + std::to_string(k) +
                             " parameter(s), got " + std::to_string(args.size()));
    };
    if (name == "petersen") {
        want(0);
        return petersen();
    }
    if (name == "complete") {
        want(1);
        return complete(args[0]);
    }
    if (name == "path") {
        want(1);
        return path(args[0]);
    }
    if (name == "cycle") {
        want(1);
        return cycle(args[0]);
    }
    if (name == "star") {
        want(1);
        return star(args[0]);
    }
    if (name == "bipartite") {
        want(2);
        std::vector<Edge> e;
        for (int i = 0; i < args[0]; ++i)
            for (int j = 0; j < args[1]; ++j) e.emplace_back(i, args[0] + j);
        return build_graph(args[0] + args[1], e);
    }
    if (name == "tree") {
        want(2);
        return random_tree(args[0], static_cast<std::uint64_t>(args[1]));
    }
    if (name == "chain") {
        want(2);
        return cycle_chain(args[0], args[1]);
    }
    if (name == "fixture13") {
        want(0);
        return fixture_H();
    }
    if (name == "fixture11") {
        want(0);
        return fixture_Hprime();
    }
    if (name == "demo-k4") {
        want(0);
        return sierpinski_demo_K4();
    }
    throw UsageError("unknown generator '" + name +
                     "' (petersen, complete:n, path:n, cycle:n, star:n, bipartite:a,b, "
                     "tree:n,seed, chain:k,l, fixture13, fixture11, demo-k4)");
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Input format is detected from content: JSON object vs graph6 line.
Graph load_graph(const std::string& path) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("'" + path + "' is empty");
    try {
        if (text[first] == '{') return parse_graph_json(text);
        return parse_graph6(text);
    } catch (const std::exception& e) {
        throw UsageError("'" + path + "': " + e.what());
    }
}

// One graph per subcommand slot: either a file or a generator shorthand.
struct GraphArg {
    std::string file;
    std::string gen;

    Graph resolve(const char* slot) const {
        if (!file.empty() && !gen.empty())
            throw UsageError(std::string("give either a file or a generator for ") + slot +
                             ", not both");
        if (!file.empty()) return load_graph(file);
        if (!gen.empty()) return generate(gen);
        throw UsageError(std::string("missing input graph for ") + slot);
    }
};

struct Common {
    std::string output;
    std::int64_t node_limit = 0;  // 0 = unlimited
    std::int64_t time_limit_ms = 0;
    int jobs = 0;  // 0 = resolve from env / hardware
    std::uint64_t seed = 20260814;

    SolverConfig solver() const {
        SolverConfig cfg;
        if (node_limit > 0) cfg.node_limit = node_limit;
        if (time_limit_ms > 0) cfg.time_limit_ms = time_limit_ms;
        return cfg;
    }
    int resolved_jobs() const { return jobs >= 1 ? jobs : default_jobs(); }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--output,-o", c.output, "write the JSON result to this file instead of stdout");
    cmd->add_option("--node-limit", c.node_limit, "stop each solve after this many search nodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit-ms", c.time_limit_ms, "stop each solve after this many ms")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs,-j", c.jobs, "worker count (default: GPGRAPH_JOBS or hardware)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "seed for randomized corpora");
}

void add_graph_arg(CLI::App* cmd, GraphArg& a, const std::string& file_flag,
                   const std::string& gen_flag, const char* what) {
    // `--h` as an option name requires dropping the default `-h` help alias.
    cmd->set_help_flag("--help", "print this help message and exit");
    cmd->add_option(file_flag, a.file, std::string("graph file (graph6 or JSON) for ") + what);
    cmd->add_option(gen_flag, a.gen, std::string("generator shorthand for ") + what);
}

void emit(const json& j, const Common& c) {
    std::string text = j.dump(2);
    if (c.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + c.output + "'");
        out << text << "\n";
    }
}

EnumSpec parse_mode(const std::string& mode) {
    EnumSpec spec;
    if (mode.empty() || mode == "auto") {
        spec.kind = EnumSpec::Kind::auto_pick;
    } else if (mode == "full") {
        spec.kind = EnumSpec::Kind::full;
    } else if (mode == "sym") {
        spec.kind = EnumSpec::Kind::symmetry;
    } else if (mode.rfind("cap:", 0) == 0) {
        spec.kind = EnumSpec::Kind::capped;
        try {
            spec.cap = std::stoll(mode.substr(4));
        } catch (...) {
            throw UsageError("bad cap in --mode '" + mode + "'");
        }
        if (spec.cap < 1) throw UsageError("cap must be positive");
    } else {
        throw UsageError("unknown --mode '" + mode + "' (auto, full, sym, cap:<k>)");
    }
    return spec;
}

// f shorthand: "identity", "constant:<t>", or explicit "1,0,2,..."
VertexMap parse_map(const std::string& text, int g_order) {
    if (text == "identity") return identity_map(g_order);
    if (text.rfind("constant:", 0) == 0) {
        try {
            return constant_map(g_order, std::stoi(text.substr(9)));
        } catch (const std::exception&) {
            throw UsageError("bad constant map '" + text + "'");
        }
    }
    VertexMap f;
    try {
        f.values = parse_int_list(text);
    } catch (...) {
        throw UsageError("bad map '" + text + "' (identity, constant:<t>, or v0,v1,...)");
    }
    if (static_cast<int>(f.values.size()) != g_order)
        throw UsageError("map has " + std::to_string(f.values.size()) + " entries, first factor has " +
                         std::to_string(g_order) + " vertices");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact general position invariants and Sierpinski-product extremes"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- gp ----------------------------------------------------------------
    auto gp_common = std::make_shared<Common>();
    auto gp_in = std::make_shared<GraphArg>();
    CLI::App* gp_cmd = app.add_subcommand("gp", "maximum general position set of one graph");
    add_graph_arg(gp_cmd, *gp_in, "--in", "--gen", "the graph");
    add_common(gp_cmd, *gp_common);
    gp_cmd->callback([&, gp_common, gp_in] {
        Graph g = gp_in->resolve("gp");
        SolveResult r = max_gp(g, gp_common->solver());
        json j = r;
        j["n"] = g.order();
        emit(j, *gp_common);
        if (!r.optimal) exit_code = kExitNotExhaustive;
    });

    // ---- xi ----------------------------------------------------------------
    auto xi_common = std::make_shared<Common>();
    auto xi_in = std::make_shared<GraphArg>();
    auto xi_u = std::make_shared<int>(-1);
    auto xi_all = std::make_shared<bool>(false);
    CLI::App* xi_cmd =
        app.add_subcommand("xi", "largest colinear set anchored at one vertex (or all)");
    add_graph_arg(xi_cmd, *xi_in, "--in", "--gen", "the graph");
    CLI::Option* xi_u_opt = xi_cmd->add_option("--u", *xi_u, "anchor vertex");
    xi_cmd->add_flag("--all", *xi_all, "solve every anchor; report per-vertex values and extremes");
    add_common(xi_cmd, *xi_common);
    xi_cmd->callback([&, xi_common, xi_in, xi_u, xi_all, xi_u_opt] {
        Graph g = xi_in->resolve("xi");
        if (*xi_all == (xi_u_opt->count() > 0))
            throw UsageError("give exactly one of --u <vertex> or --all");
        SolverConfig cfg = xi_common->solver();
        if (*xi_all) {
            CollinearityOracle o(g);
            json per = json::array();
            bool all_optimal = true;
            for (int u = 0; u < g.order(); ++u) {
                SolveResult r = xi(g, o, u, cfg);
                json e = r;
                e["anchor"] = u;
                per.push_back(std::move(e));
                all_optimal = all_optimal && r.optimal;
            }
            json j = {{"n", g.order()},
                      {"perVertex", std::move(per)},
                      {"xiMinus", xi_minus(g, cfg)},
                      {"xiMax", xi_max(g, cfg)}};
            emit(j, *xi_common);
            if (!all_optimal) exit_code = kExitNotExhaustive;
        } else {
            if (*xi_u < 0 || *xi_u >= g.order())
                throw UsageError("--u out of range for a graph on " + std::to_string(g.order()) +
                                 " vertices");
            SolveResult r = xi(g, *xi_u, cfg);
            json j = r;
            j["anchor"] = *xi_u;
            j["n"] = g.order();
            emit(j, *xi_common);
            if (!r.optimal) exit_code = kExitNotExhaustive;
        }
    });

    // ---- product -------------------------------------------------------------
    auto pr_common = std::make_shared<Common>();
    auto pr_g = std::make_shared<GraphArg>();
    auto pr_h = std::make_shared<GraphArg>();
    auto pr_map = std::make_shared<std::string>();
    auto pr_format = std::make_shared<std::string>("json");
    CLI::App* pr_cmd = app.add_subcommand("product", "build one Sierpinski product G x_f H");
    add_graph_arg(pr_cmd, *pr_g, "--g", "--gen-g", "the first factor");
    add_graph_arg(pr_cmd, *pr_h, "--h", "--gen-h", "the second factor");
    pr_cmd->add_option("--map,-f", *pr_map, "identity | constant:<t> | v0,v1,...")->required();
    pr_cmd->add_option("--format", *pr_format, "output format: json, graph6, dot")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));
    add_common(pr_cmd, *pr_common);
    pr_cmd->callback([&, pr_common, pr_g, pr_h, pr_map, pr_format] {
        Graph g = pr_g->resolve("--g");
        Graph h = pr_h->resolve("--h");
        ProductGraph p = build_product(g, h, parse_map(*pr_map, g.order()));
        if (*pr_format == "graph6") {
            std::string line = write_graph6(p.graph);
            if (pr_common->output.empty()) {
                std::cout << line << "\n";
            } else {
                std::ofstream out(pr_common->output, std::ios::binary);
                if (!out) throw UsageError("cannot write '" + pr_common->output + "'");
                out << line << "\n";
            }
            return;
        }
        if (*pr_format == "dot") {
            std::string dot = to_dot(p.graph);
            if (pr_common->output.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(pr_common->output, std::ios::binary);
                if (!out) throw UsageError("cannot write '" + pr_common->output + "'");
                out << dot;
            }
            return;
        }
        json connecting = json::array();
        for (Edge e : p.connecting) connecting.push_back({e.first, e.second});
        json j = {{"graph", p.graph},
                  {"gDim", p.g_dim},
                  {"hDim", p.h_dim},
                  {"map", p.map},
                  {"connecting", std::move(connecting)}};
        emit(j, *pr_common);
    });

    // ---- maps ----------------------------------------------------------------
    auto mp_common = std::make_shared<Common>();
    auto mp_g = std::make_shared<GraphArg>();
    auto mp_h = std::make_shared<GraphArg>();
    auto mp_mode = std::make_shared<std::string>("auto");
    auto mp_limit = std::make_shared<std::int64_t>(50);
    CLI::App* mp_cmd = app.add_subcommand("maps", "list the map enumeration for a factor pair");
    add_graph_arg(mp_cmd, *mp_g, "--g", "--gen-g", "the first factor");
    add_graph_arg(mp_cmd, *mp_h, "--h", "--gen-h", "the second factor");
    mp_cmd->add_option("--mode", *mp_mode, "auto | full | sym | cap:<k>");
    mp_cmd->add_option("--limit", *mp_limit, "list at most this many maps (-1 = all)");
    add_common(mp_cmd, *mp_common);
    mp_cmd->callback([&, mp_common, mp_g, mp_h, mp_mode, mp_limit] {
        Graph g = mp_g->resolve("--g");
        Graph h = mp_h->resolve("--h");
        MapEnumeration maps = resolve_maps(g, h, parse_mode(*mp_mode));
        emit(maps_json(maps, *mp_limit), *mp_common);
    });

    // ---- gps -----------------------------------------------------------------
    auto gs_common = std::make_shared<Common>();
    auto gs_g = std::make_shared<GraphArg>();
    auto gs_h = std::make_shared<GraphArg>();
    auto gs_kind = std::make_shared<std::string>("max");
    auto gs_mode = std::make_shared<std::string>("auto");
    CLI::App* gs_cmd =
        app.add_subcommand("gps", "extreme of gp(G x_f H) over the enumerated maps f");
    add_graph_arg(gs_cmd, *gs_g, "--g", "--gen-g", "the first factor");
    add_graph_arg(gs_cmd, *gs_h, "--h", "--gen-h", "the second factor");
    gs_cmd->add_option("--kind", *gs_kind, "max (default) or lower")
        ->check(CLI::IsMember({"max", "lower"}));
    gs_cmd->add_option("--mode", *gs_mode, "auto | full | sym | cap:<k>");
    add_common(gs_cmd, *gs_common);
    gs_cmd->callback([&, gs_common, gs_g, gs_h, gs_kind, gs_mode] {
        Graph g = gs_g->resolve("--g");
        Graph h = gs_h->resolve("--h");
        EnumSpec spec = parse_mode(*gs_mode);
        SolverConfig cfg = gs_common->solver();
        int jobs = gs_common->resolved_jobs();
        GpsResult r = *gs_kind == "max" ? gps_max(g, h, spec, cfg, jobs)
                                        : gps_lower(g, h, spec, cfg, jobs);
        emit(json(r), *gs_common);
        if (!r.exhaustive) exit_code = kExitNotExhaustive;
    });

    // ---- predict ---------------------------------------------------------------
    auto pd_common = std::make_shared<Common>();
    auto pd_g = std::make_shared<GraphArg>();
    auto pd_h = std::make_shared<GraphArg>();
    CLI::App* pd_cmd =
        app.add_subcommand("predict", "closed-form values and bounds for a factor pair");
    add_graph_arg(pd_cmd, *pd_g, "--g", "--gen-g", "the first factor");
    add_graph_arg(pd_cmd, *pd_h, "--h", "--gen-h", "the second factor");
    add_common(pd_cmd, *pd_common);
    pd_cmd->callback([&, pd_common, pd_g, pd_h] {
        Graph g = pd_g->resolve("--g");
        Graph h = pd_h->resolve("--h");
        json j = {{"nG", g.order()}, {"nH", h.order()}, {"predictions", predict(g, h, pd_common->solver())}};
        emit(j, *pd_common);
    });

    // ---- verify ----------------------------------------------------------------
    auto vf_common = std::make_shared<Common>();
    auto vf_suite = std::make_shared<std::string>("all");
    auto vf_budget = std::make_shared<std::int64_t>(0);
    auto vf_claim = std::make_shared<std::string>();
    auto vf_quiet = std::make_shared<bool>(false);
    CLI::App* vf_cmd = app.add_subcommand("verify", "re-check the theorem battery at desk scale");
    vf_cmd->add_option("--suite", *vf_suite, "k2 | complete | colinear | all")
        ->check(CLI::IsMember({"k2", "complete", "colinear", "all"}));
    vf_cmd->add_option("--budget", *vf_budget, "wall-clock budget in seconds (0 = unlimited)");
    vf_cmd->add_option("--claim", *vf_claim, "run a single named claim instead of a suite");
    vf_cmd->add_flag("--quiet", *vf_quiet, "suppress the text rendering on stderr");
    add_common(vf_cmd, *vf_common);
    vf_cmd->callback([&, vf_common, vf_suite, vf_budget, vf_claim, vf_quiet] {
        VerifyOptions opt;
        opt.solver = vf_common->solver();
        opt.jobs = vf_common->resolved_jobs();
        opt.seed = vf_common->seed;
        opt.budget_ms = *vf_budget * 1000;
        VerifyReport report;
        if (!vf_claim->empty()) {
            report.suite = "claim:" + *vf_claim;
            report.budget_ms = opt.budget_ms;
            report.claims.push_back(run_claim(*vf_claim, opt));
            report.ms = report.claims.back().ms;
        } else {
            report = verify_theorems(*vf_suite, opt);
        }
        emit(json(report), *vf_common);
        if (!*vf_quiet) std::cerr << render_text(report);
        if (!report.ok())
            exit_code = kExitClaimFailed;
        else if (report.any_skipped())
            exit_code = kExitNotExhaustive;
    });

    // ---- gen -------------------------------------------------------------------
    auto gn_common = std::make_shared<Common>();
    auto gn_what = std::make_shared<std::string>();
    auto gn_format = std::make_shared<std::string>("json");
    CLI::App* gn_cmd = app.add_subcommand("gen", "emit a named graph family member");
    gn_cmd->add_option("--gen", *gn_what, "generator shorthand (see gp --help)")->required();
    gn_cmd->add_option("--format", *gn_format, "output format: json, graph6, dot")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));
    add_common(gn_cmd, *gn_common);
    gn_cmd->callback([&, gn_common, gn_what, gn_format] {
        Graph g = generate(*gn_what);
        std::string text;
        if (*gn_format == "json")
            text = write_graph_json(g) + "\n";
        else if (*gn_format == "graph6")
            text = write_graph6(g) + "\n";
        else
            text = to_dot(g);
        if (gn_common->output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(gn_common->output, std::ios::binary);
            if (!out) throw UsageError("cannot write '" + gn_common->output + "'");
            out << text;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
