#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "steiner/verify.hpp"

namespace {

using steiner::Graph;
using steiner::QuarterRational;
using json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;

struct GraphOptions {
    std::string input;
    std::string format = "edgelist";
    std::string family;
    std::string params;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opt) {
    cmd->add_option("--input", opt.input, "graph file, or - for stdin");
    cmd->add_option("--format", opt.format, "input format: edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    cmd->add_option("--family", opt.family,
                    "named family: path|cycle|star|complete|complete_multipartite|paw");
    cmd->add_option("--params", opt.params, "family parameters, comma separated");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    return out;
}

steiner::Family family_from_name(const std::string& name) {
    if (name == "path") return steiner::Family::path;
    if (name == "cycle") return steiner::Family::cycle;
    if (name == "star") return steiner::Family::star;
    if (name == "complete") return steiner::Family::complete;
    if (name == "complete_multipartite") return steiner::Family::complete_multipartite;
    if (name == "paw") return steiner::Family::paw;
    throw std::invalid_argument("unknown family: " + name);
}

struct LoadedGraph {
    Graph g;
    std::string desc;
};

LoadedGraph load_graph(const GraphOptions& opt) {
    if (opt.family.empty() == opt.input.empty())
        throw std::invalid_argument("choose exactly one of --input and --family");
    if (!opt.family.empty()) {
        steiner::FamilySpec spec;
        spec.kind = family_from_name(opt.family);
        if (!opt.params.empty()) spec.params = parse_int_list(opt.params);
        std::string desc = opt.family;
        if (!opt.params.empty()) desc += "(" + opt.params + ")";
        return {steiner::generate(spec), desc};
    }
    std::string text;
    if (opt.input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open " + opt.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Graph g = opt.format == "graph6" ? steiner::parse_graph6(text)
                                     : steiner::parse_edgelist(text);
    return {g, opt.input};
}

std::string edges_str(const Graph& g) {
    std::string out;
    for (const steiner::Edge& e : g.edges()) {
        if (!out.empty()) out += " ";
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

// ---- output ----------------------------------------------------------------

struct Sink {
    std::string mode;  // json|tsv
    std::vector<std::string> columns;
    bool header_done = false;

    void emit(const json& row) {
        if (mode == "json") {
            std::cout << row.dump() << "\n";
            return;
        }
        if (!header_done) {
            for (std::size_t i = 0; i < columns.size(); ++i)
                std::cout << (i ? "\t" : "") << columns[i];
            std::cout << "\n";
            header_done = true;
        }
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) std::cout << "\t";
            auto it = row.find(columns[i]);
            if (it == row.end() || it->is_null()) continue;
            if (it->is_string())
                std::cout << it->get<std::string>();
            else
                std::cout << it->dump();
        }
        std::cout << "\n";
    }
};

json value_fields(std::int64_t v) {
    return {{"value", std::to_string(v)}, {"value_num4", 4 * v}};
}

json value_fields(QuarterRational v) {
    return {{"value", v.str()}, {"value_num4", v.quarters()}};
}

// ---- compute ---------------------------------------------------------------

struct ComputeOptions {
    GraphOptions graph;
    int k = 0;
    std::string k_range;
    std::string index = "all";
    std::string method = "direct";
    bool per_edge = false;
    std::string output = "json";
};

std::vector<int> resolve_ks(const ComputeOptions& opt) {
    if (opt.k != 0 && !opt.k_range.empty())
        throw std::invalid_argument("choose at most one of --k and --k-range");
    if (opt.k != 0) return {opt.k};
    if (opt.k_range.empty()) return {};
    auto dots = opt.k_range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--k-range expects A..B");
    int lo = std::stoi(opt.k_range.substr(0, dots));
    int hi = std::stoi(opt.k_range.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("--k-range expects A <= B");
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

int run_compute(const ComputeOptions& opt) {
    LoadedGraph lg = load_graph(opt.graph);
    const Graph& g = lg.g;
    const int n = g.order();
    Sink sink{opt.output,
              {"record", "graph", "edges", "n", "m", "k", "index", "method", "edge", "n_u",
               "n_v", "n_0", "value", "value_num4"}};
    json base = {{"graph", lg.desc}, {"n", n}, {"m", g.size()}};
    if (opt.graph.family.empty()) base["edges"] = edges_str(g);

    const bool all = opt.index == "all";
    const bool want_classical = all || opt.index.rfind("classical", 0) == 0;
    const bool want_sz = all || opt.index == "sz";
    const bool want_rsz = all || opt.index == "rsz";
    const bool want_sw = all || opt.index == "sw";

    std::vector<int> ks = resolve_ks(opt);
    if (ks.empty() && (want_sz || want_rsz || want_sw) && !(all && want_classical))
        throw std::invalid_argument("--k or --k-range is required for this index");

    auto emit_result = [&](int k, const std::string& index, const std::string& method,
                           json values) {
        json row = base;
        row["record"] = "result";
        if (k > 0) row["k"] = k;
        row["index"] = index;
        row["method"] = method;
        row.update(values);
        sink.emit(row);
    };

    if (want_classical) {
        if (all || opt.index == "classical-sz")
            emit_result(0, "classical-sz", "direct", value_fields(steiner::classical_szeged(g)));
        if (all || opt.index == "classical-rsz")
            emit_result(0, "classical-rsz", "direct",
                        value_fields(steiner::classical_revised_szeged(g)));
    }

    for (int k : ks) {
        bool szk_valid = k >= 2 && k <= n - 1;
        bool sw_valid = k >= 2 && k <= n;
        if (want_sz && (szk_valid || !all)) {
            if (opt.method == "orbits") {
                std::int64_t via_orbits = steiner::sz_k_via_orbits(g, k);
                std::int64_t direct = steiner::sz_k(g, k);
                if (via_orbits != direct)
                    throw std::logic_error("orbit and direct Sz_k values disagree");
                emit_result(k, "sz", "orbits", value_fields(via_orbits));
            } else {
                emit_result(k, "sz", "direct", value_fields(steiner::sz_k(g, k)));
            }
        }
        if (want_rsz && (szk_valid || !all)) {
            if (opt.method == "orbits") {
                QuarterRational via_orbits = steiner::rsz_k_via_orbits(g, k);
                QuarterRational direct = steiner::rsz_k(g, k);
                if (!(via_orbits == direct))
                    throw std::logic_error("orbit and direct rSz_k values disagree");
                emit_result(k, "rsz", "orbits", value_fields(via_orbits));
            } else {
                emit_result(k, "rsz", "direct", value_fields(steiner::rsz_k(g, k)));
            }
        }
        if (want_sw && (sw_valid || !all))
            emit_result(k, "sw", "direct", value_fields(steiner::steiner_wiener(g, k)));
        if (opt.per_edge && (want_sz || want_rsz) && (szk_valid || !all)) {
            steiner::SteinerTable table = steiner::build_steiner_table_any_k(g, k);
            for (const steiner::Edge& e : g.edges()) {
                steiner::EdgeClassification c = steiner::classify_edge(table, g, e, k);
                json row = base;
                row["record"] = "edge";
                row["k"] = k;
                row["edge"] = steiner::edge_str(e);
                row["n_u"] = c.n_u;
                row["n_v"] = c.n_v;
                row["n_0"] = c.n_0;
                sink.emit(row);
            }
        }
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string claim;
    int max_n = 6;
    std::string k = "all";
    std::uint64_t seed = 12345;
    int random_count = 200;
    std::string output = "json";
};

json finding_json(const steiner::Finding& f) {
    json row = {{"record", "finding"}, {"claim", f.claim},       {"instance", f.instance},
                {"k", f.k},            {"index", f.index},       {"expected", f.expected},
                {"actual", f.actual},  {"status", std::string(steiner::to_string(f.status))}};
    if (!f.witness.empty()) row["witness"] = f.witness;
    return row;
}

int run_verify(const VerifyOptions& opt) {
    steiner::CorpusSpec spec;
    spec.max_n = opt.max_n;
    spec.seed = opt.seed;
    spec.random_count = opt.random_count;
    if (opt.k != "all") spec.k = std::stoi(opt.k);

    std::vector<std::string> claims;
    if (opt.claim == "all") {
        claims = steiner::claim_ids();
    } else {
        const std::vector<std::string>& known = steiner::claim_ids();
        if (std::find(known.begin(), known.end(), opt.claim) == known.end())
            throw std::invalid_argument("unknown claim id: " + opt.claim);
        claims.push_back(opt.claim);
    }

    Sink sink{opt.output,
              {"record", "claim", "instance", "k", "index", "expected", "actual", "status",
               "witness", "n_max", "seed", "random_count", "pairs_checked", "tie_pairs",
               "violation_count", "violations"}};
    sink.emit(json{{"record", "runinfo"},
                   {"claim", opt.claim},
                   {"n_max", opt.max_n},
                   {"k", opt.k},
                   {"seed", opt.seed},
                   {"random_count", opt.random_count}});

    bool sound_failure = false;
    for (const std::string& claim : claims) {
        if (claim == "conjecture") {
            std::vector<int> ks;
            if (spec.k != 0) {
                if (opt.claim == "all" && spec.k < 3) continue;  // nothing to scan
                ks.push_back(spec.k);
            } else {
                for (int k = 3; k <= opt.max_n - 1; ++k) ks.push_back(k);
            }
            for (int k : ks) {
                steiner::ConjectureReport report = steiner::conjecture_scan(opt.max_n, k);
                json violations = json::array();
                for (const steiner::ConjectureViolation& v : report.violations)
                    violations.push_back("n=" + std::to_string(v.n) + " T=" + v.t1 +
                                         " T'=" + v.t2 + " Sz_k=" + std::to_string(v.szk1) +
                                         "vs" + std::to_string(v.szk2) +
                                         " Sz=" + std::to_string(v.sz1) + "vs" +
                                         std::to_string(v.sz2));
                sink.emit(json{{"record", "conjecture-report"},
                               {"claim", "conjecture"},
                               {"n_max", report.n_max},
                               {"k", report.k},
                               {"pairs_checked", report.pairs_checked},
                               {"tie_pairs", report.tie_pairs},
                               {"violation_count", report.violations.size()},
                               {"violations", violations}});
            }
            continue;
        }
        std::vector<steiner::Finding> findings = steiner::verify_claim(claim, spec);
        for (const steiner::Finding& f : findings) {
            sink.emit(finding_json(f));
            if (f.status == steiner::FindingStatus::counterexample &&
                steiner::claim_is_sound(claim))
                sound_failure = true;
        }
    }
    return sound_failure ? 1 : 0;
}

// ---- orbits ----------------------------------------------------------------

struct OrbitOptions {
    GraphOptions graph;
    int k = 0;
    std::string output = "json";
};

int run_orbits(const OrbitOptions& opt) {
    LoadedGraph lg = load_graph(opt.graph);
    const Graph& g = lg.g;
    steiner::OrbitPartition part = steiner::edge_orbits(g);
    steiner::SteinerTable table = steiner::build_steiner_table_any_k(g, opt.k);
    Sink sink{opt.output,
              {"record", "graph", "n", "m", "k", "index", "orbit", "size", "representative",
               "edges", "n_u", "n_v", "n_0", "value", "value_num4"}};
    json base = {{"graph", lg.desc}, {"n", g.order()}, {"m", g.size()}, {"k", opt.k}};
    std::int64_t sz_total = 0;
    QuarterRational rsz_total;
    for (std::size_t i = 0; i < part.orbits.size(); ++i) {
        steiner::EdgeClassification c = steiner::classify_edge(table, g, part.representatives[i],
                                                               opt.k);
        std::string edges;
        for (const steiner::Edge& e : part.orbits[i]) {
            if (!edges.empty()) edges += " ";
            edges += steiner::edge_str(e);
        }
        json row = base;
        row["record"] = "orbit";
        row["orbit"] = i;
        row["size"] = part.orbits[i].size();
        row["representative"] = steiner::edge_str(part.representatives[i]);
        row["edges"] = edges;
        row["n_u"] = c.n_u;
        row["n_v"] = c.n_v;
        row["n_0"] = c.n_0;
        sink.emit(row);
        sz_total += static_cast<std::int64_t>(part.orbits[i].size()) * c.sz_term();
        rsz_total += static_cast<std::int64_t>(part.orbits[i].size()) * c.rsz_term();
    }
    if (sz_total != steiner::sz_k(g, opt.k) || !(rsz_total == steiner::rsz_k(g, opt.k)))
        throw std::logic_error("orbit and direct index values disagree");
    json sz_row = base;
    sz_row["record"] = "total";
    sz_row["index"] = "sz";
    sz_row.update(value_fields(sz_total));
    sink.emit(sz_row);
    json rsz_row = base;
    rsz_row["record"] = "total";
    rsz_row["index"] = "rsz";
    rsz_row.update(value_fields(rsz_total));
    sink.emit(rsz_row);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Steiner (revised) Szeged index computation and claim verification"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "compute indices of one graph");
    add_graph_options(compute, copt.graph);
    compute->add_option("--k", copt.k, "subset size k");
    compute->add_option("--k-range", copt.k_range, "subset size range A..B");
    compute->add_option("--index", copt.index, "sz|rsz|sw|classical-sz|classical-rsz|all")
        ->check(CLI::IsMember({"sz", "rsz", "sw", "classical-sz", "classical-rsz", "all"}));
    compute->add_option("--method", copt.method, "direct|orbits")
        ->check(CLI::IsMember({"direct", "orbits"}));
    compute->add_flag("--per-edge", copt.per_edge, "emit per-edge classifications");
    compute->add_option("--output", copt.output, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "check published claims against the oracle");
    verify->add_option("--claim", vopt.claim, "claim id or all")->required();
    verify->add_option("--max-n", vopt.max_n, "largest order in the corpus");
    verify->add_option("--k", vopt.k, "subset size or all");
    verify->add_option("--seed", vopt.seed, "seed for the random corpus extension");
    verify->add_option("--random-count", vopt.random_count,
                       "random graphs appended when --max-n > 7");
    verify->add_option("--output", vopt.output, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    OrbitOptions oopt;
    CLI::App* orbits = app.add_subcommand("orbits", "edge orbits with representative terms");
    add_graph_options(orbits, oopt.graph);
    orbits->add_option("--k", oopt.k, "subset size k")->required();
    orbits->add_option("--output", oopt.output, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (compute->parsed()) return run_compute(copt);
        if (verify->parsed()) return run_verify(vopt);
        if (orbits->parsed()) return run_orbits(oopt);
    } catch (const steiner::cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
