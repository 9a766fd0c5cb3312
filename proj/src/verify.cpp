#include "steiner/verify.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace steiner {

std::string_view to_string(FindingStatus s) {
    return s == FindingStatus::confirmed ? "confirmed" : "counterexample";
}

namespace {

std::string i64s(std::int64_t v) {
    return std::to_string(v);
}

std::string mask_str(VertexMask m) {
    std::string out = "{";
    bool first = true;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

struct Instance {
    std::string desc;
    Graph g;
};

std::string g6_desc(const Graph& g) {
    return "g6:" + emit_graph6(g);
}

// Exhaustive corpus up to min(max_n, 7), extended with seeded random
// connected graphs of order 8..min(max_n, 10) when max_n > 7.
std::vector<Instance> corpus_instances(const CorpusSpec& spec, int lo_n) {
    std::vector<Instance> out;
    for (int n = lo_n; n <= std::min(spec.max_n, 7); ++n)
        for (const Graph& g : connected_graph_corpus(n)) out.push_back({g6_desc(g), g});
    if (spec.max_n > 7) {
        Rng rng(spec.seed);
        const int hi = std::min(spec.max_n, 10);
        for (int i = 0; i < spec.random_count; ++i) {
            int n = 8 + i % (hi - 7);
            Graph g = random_connected_graph(n, rng);
            out.push_back({"seed" + std::to_string(spec.seed) + "#" + std::to_string(i) + ":" +
                               g6_desc(g),
                           std::move(g)});
        }
    }
    return out;
}

std::vector<int> k_values(const CorpusSpec& spec, int lo, int hi) {
    std::vector<int> ks;
    if (spec.k != 0) {
        if (spec.k >= lo && spec.k <= hi) ks.push_back(spec.k);
    } else {
        for (int k = lo; k <= hi; ++k) ks.push_back(k);
    }
    return ks;
}

template <typename Pred>
std::optional<VertexMask> first_eligible_subset(const Graph& g, Edge e, int k, Pred pred) {
    std::vector<int> eligible;
    for (int v = 0; v < g.order(); ++v)
        if (v != e.u && v != e.v) eligible.push_back(v);
    const int r = k - 1;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        VertexMask s = 0;
        for (int i = 0; i < r; ++i) s |= vertex_bit(eligible[pick[i]]);
        if (pred(s)) return s;
        int i = r - 1;
        while (i >= 0 && pick[i] == static_cast<int>(eligible.size()) - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

// Witness for a misclassified edge: the first S' (canonical order) whose
// two Steiner distances stand in the given relation, with both distances
// cross-checked against the brute-force oracle.
std::string subset_witness(const SteinerTable& table, const Graph& g, Edge e, int k,
                           bool want_equal) {
    auto s = first_eligible_subset(g, e, k, [&](VertexMask m) {
        int du = table.distance(m | vertex_bit(e.u));
        int dv = table.distance(m | vertex_bit(e.v));
        return want_equal ? du == dv : du != dv;
    });
    if (!s) return "";
    int du = table.distance(*s | vertex_bit(e.u));
    int dv = table.distance(*s | vertex_bit(e.v));
    if (g.order() <= 20) {
        if (du != steiner_distance_oracle(g, *s | vertex_bit(e.u)) ||
            dv != steiner_distance_oracle(g, *s | vertex_bit(e.v)))
            throw std::logic_error("table and brute-force oracle disagree on a witness");
    }
    return "S'=" + mask_str(*s) + ": d(S'+" + std::to_string(e.u) + ")=" + i64s(du) + ", d(S'+" +
           std::to_string(e.v) + ")=" + i64s(dv);
}

Finding value_finding(std::string claim, std::string instance, int k, std::string index,
                      std::string expected, std::string actual, std::string witness = "") {
    Finding f;
    f.claim = std::move(claim);
    f.instance = std::move(instance);
    f.k = k;
    f.index = std::move(index);
    f.expected = std::move(expected);
    f.actual = std::move(actual);
    f.status = f.expected == f.actual ? FindingStatus::confirmed : FindingStatus::counterexample;
    if (f.status == FindingStatus::counterexample) f.witness = std::move(witness);
    return f;
}

Graph star_graph(int leaves) {
    return generate({Family::star, {leaves}});
}

Graph multipartite(const std::vector<int>& parts) {
    return generate({Family::complete_multipartite, parts});
}

std::string multipartite_name(const std::vector<int>& parts) {
    std::string name = "K_{";
    for (std::size_t i = 0; i < parts.size(); ++i)
        name += (i ? "," : "") + std::to_string(parts[i]);
    return name + "}";
}

// ---- per-claim checks ------------------------------------------------------

void check_thm21(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int n = 3; n <= std::min(spec.max_n, 9); ++n)
        for (const Graph& t : enumerate_trees(n))
            for (int k : k_values(spec, 2, n - 1)) {
                std::int64_t expected = sz_tree_formula(t, k);
                std::int64_t actual = sz_k(t, k);
                std::string witness;
                if (expected != actual) {
                    SteinerTable table = build_steiner_table_any_k(t, k);
                    for (const Edge& e : t.edges()) {
                        EdgeClassification c = classify_edge(table, t, e, k);
                        witness = "edge=" + edge_str(e) + " direct (n_u,n_v,n_0)=(" +
                                  i64s(c.n_u) + "," + i64s(c.n_v) + "," + i64s(c.n_0) + ")";
                        break;
                    }
                }
                out.push_back(value_finding("thm2.1", g6_desc(t), k, "sz", i64s(expected),
                                            i64s(actual), witness));
            }
}

void check_ex21(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int n = 3; n <= std::min(spec.max_n, 12); ++n) {
        Graph p = generate({Family::path, {n}});
        std::string desc = "P_" + std::to_string(n);
        for (int k : k_values(spec, 2, n - 1)) {
            out.push_back(value_finding("ex2.1", desc, k, "sz", i64s(sz_path_formula(n, k)),
                                        i64s(sz_k(p, k))));
            out.push_back(value_finding("ex2.1", desc, k, "rsz", rsz_path_formula(n, k).str(),
                                        rsz_k(p, k).str()));
            SteinerTable table = build_steiner_table_any_k(p, k);
            for (int i = 1; i <= n - 1; ++i) {
                EdgeClassification c = classify_edge(table, p, {i - 1, i}, k);
                out.push_back(value_finding("ex2.1", desc + " e=" + std::to_string(i), k, "n0",
                                            i64s(n0_path(n, k, i)), i64s(c.n_0)));
            }
        }
    }
}

void check_ex22(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int leaves = 2; leaves <= std::min(spec.max_n - 1, 15); ++leaves) {
        Graph s = star_graph(leaves);
        std::string desc = "S_" + std::to_string(leaves + 1);
        for (int k : k_values(spec, 2, leaves)) {
            std::int64_t formula = sz_star_formula(leaves, k);
            out.push_back(
                value_finding("ex2.2", desc, k, "sz", i64s(formula), i64s(sz_k(s, k))));
            out.push_back(value_finding("ex2.2", desc, k, "rsz",
                                        QuarterRational::from_int(formula).str(),
                                        rsz_k(s, k).str()));
        }
    }
}

void check_thm31(const CorpusSpec& spec, std::vector<Finding>& out) {
    std::vector<Instance> instances;
    for (int n = 3; n <= std::min(spec.max_n, 6); ++n)
        for (const Graph& g : connected_graph_corpus(n)) instances.push_back({g6_desc(g), g});
    instances.push_back({"C_5", generate({Family::cycle, {5}})});
    instances.push_back({"K_5", generate({Family::complete, {5}})});
    instances.push_back({"S_5", star_graph(4)});
    instances.push_back({"K_{2,3}", multipartite({2, 3})});
    instances.push_back({"paw", generate({Family::paw, {}})});
    instances.push_back({"P_5", generate({Family::path, {5}})});
    for (const Instance& inst : instances) {
        const int n = inst.g.order();
        std::vector<int> ks;
        bool named = inst.desc.find("g6:") == std::string::npos;
        for (int k : k_values(spec, 2, std::min(n - 1, named ? 8 : 3))) ks.push_back(k);
        OrbitPartition part = edge_orbits(inst.g);
        for (int k : ks) {
            SteinerTable table = build_steiner_table_any_k(inst.g, k);
            for (std::size_t i = 0; i < part.orbits.size(); ++i) {
                EdgeClassification rep = classify_edge(table, inst.g, part.representatives[i], k);
                auto pair_str = [](std::int64_t a, std::int64_t b, std::int64_t n0) {
                    return "{" + i64s(std::min(a, b)) + "," + i64s(std::max(a, b)) +
                           "},n0=" + i64s(n0);
                };
                std::string expected = pair_str(rep.n_u, rep.n_v, rep.n_0);
                std::string actual = expected;
                std::string witness;
                for (const Edge& e : part.orbits[i]) {
                    EdgeClassification c = classify_edge(table, inst.g, e, k);
                    std::string got = pair_str(c.n_u, c.n_v, c.n_0);
                    if (got != expected) {
                        actual = got;
                        witness = "edge=" + edge_str(e) + " vs representative " +
                                  edge_str(part.representatives[i]);
                        break;
                    }
                }
                out.push_back(value_finding(
                    "thm3.1",
                    inst.desc + " orbit=" + edge_str(part.representatives[i]), k,
                    "orbit-class", expected, actual, witness));
            }
        }
    }
}

void check_cor32(const CorpusSpec& spec, std::vector<Finding>& out) {
    std::vector<Instance> instances;
    for (int n = 3; n <= std::min(spec.max_n, 7); ++n)
        for (const Graph& g : connected_graph_corpus(n)) instances.push_back({g6_desc(g), g});
    instances.push_back({"P_7", generate({Family::path, {7}})});
    instances.push_back({"C_7", generate({Family::cycle, {7}})});
    instances.push_back({"S_7", star_graph(6)});
    instances.push_back({"K_7", generate({Family::complete, {7}})});
    instances.push_back({"K_{2,3}", multipartite({2, 3})});
    instances.push_back({"K_{2,2,2}", multipartite({2, 2, 2})});
    for (const Instance& inst : instances) {
        const int n = inst.g.order();
        for (int k : k_values(spec, 2, n - 1)) {
            out.push_back(value_finding("cor3.2", inst.desc, k, "sz",
                                        i64s(sz_k_via_orbits(inst.g, k)),
                                        i64s(sz_k(inst.g, k))));
            out.push_back(value_finding("cor3.2", inst.desc, k, "rsz",
                                        rsz_k_via_orbits(inst.g, k).str(),
                                        rsz_k(inst.g, k).str()));
        }
    }
}

void check_ex31(const CorpusSpec& spec, bool revised, std::vector<Finding>& out) {
    for (int n = 3; n <= std::min(spec.max_n, 8); ++n) {
        Graph kn = generate({Family::complete, {n}});
        std::string desc = "K_" + std::to_string(n);
        for (int k : k_values(spec, 2, n - 1)) {
            if (!revised) {
                out.push_back(value_finding("ex3.1-sz", desc, k, "sz",
                                            i64s(sz_complete_formula(n, k)),
                                            i64s(sz_k(kn, k))));
            } else {
                std::string witness = "edge=(0,1): n_u=n_v=0, n_0=C(n-2,k-1)=" +
                                      i64s(static_cast<std::int64_t>(binomial(n - 2, k - 1))) +
                                      "; definition forces " +
                                      rsz_complete_corrected(n, k).str();
                out.push_back(value_finding("ex3.1-rsz", desc, k, "rsz",
                                            i64s(rsz_complete_paper(n, k)),
                                            rsz_k(kn, k).str(), witness));
            }
        }
    }
}

void check_ex32(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int leaves = 2; leaves <= std::min(spec.max_n - 1, 9); ++leaves) {
        Graph s = star_graph(leaves);
        std::string desc = "S_" + std::to_string(leaves + 1);
        OrbitPartition part = edge_orbits(s);
        for (int k : k_values(spec, 2, leaves)) {
            out.push_back(value_finding("ex3.2", desc, k, "orbit-count", "1",
                                        i64s(static_cast<std::int64_t>(part.orbits.size()))));
            out.push_back(value_finding("ex3.2", desc, k, "sz", i64s(sz_star_formula(leaves, k)),
                                        i64s(sz_k(s, k))));
        }
    }
}

const std::vector<std::vector<int>>& multipartite_instances() {
    static const std::vector<std::vector<int>> parts = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    return parts;
}

void check_thm33_sz(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (const std::vector<int>& parts : multipartite_instances()) {
        Graph g = multipartite(parts);
        int min_part = *std::min_element(parts.begin(), parts.end());
        for (int k : k_values(spec, 2, min_part))
            out.push_back(value_finding("thm3.3-sz", multipartite_name(parts), k, "sz",
                                        i64s(sz_multipartite_formula(parts, k)),
                                        i64s(sz_k(g, k))));
    }
}

void check_thm33_n0(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (const std::vector<int>& parts : multipartite_instances()) {
        Graph g = multipartite(parts);
        int min_part = *std::min_element(parts.begin(), parts.end());
        std::vector<int> offset(parts.size() + 1, 0);
        for (std::size_t p = 0; p < parts.size(); ++p) offset[p + 1] = offset[p] + parts[p];
        for (int k : k_values(spec, 2, min_part)) {
            SteinerTable table = build_steiner_table_any_k(g, k);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    // the published derivation assumes a_i <= a_j
                    std::size_t pi = i, pj = j;
                    if (parts[pi] > parts[pj]) std::swap(pi, pj);
                    Edge rep = make_edge(offset[pi], offset[pj]);
                    EdgeClassification c = classify_edge(table, g, rep, k);
                    std::int64_t paper =
                        n0_multipartite_paper(parts, static_cast<int>(pi), static_cast<int>(pj), k);
                    std::int64_t corr = n0_multipartite_corrected(
                        parts, static_cast<int>(pi), static_cast<int>(pj), k);
                    std::string witness = "edge=" + edge_str(rep) + ": n_u=" + i64s(c.n_u) +
                                          ", n_v=" + i64s(c.n_v) +
                                          ", corrected n_0=" + i64s(corr);
                    out.push_back(value_finding(
                        "thm3.3-n0",
                        multipartite_name(parts) + " parts(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")",
                        k, "n0", i64s(paper), i64s(c.n_0), witness));
                }
        }
    }
}

void check_thm41(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int n = 3; n <= std::min(spec.max_n, 9); ++n)
        for (const Graph& t : enumerate_trees(n)) {
            int p = pendant_edge_count(t);
            out.push_back(value_finding("thm4.1", g6_desc(t), n - 1, "sz",
                                        i64s(sz_penult_tree(n, p)), i64s(sz_k(t, n - 1))));
            out.push_back(value_finding("thm4.1", g6_desc(t), n - 1, "rsz",
                                        rsz_penult_tree(n, p).str(), rsz_k(t, n - 1).str()));
        }
}

void check_thm42(const CorpusSpec& spec, std::vector<Finding>& out) {
    std::vector<Instance> instances;
    instances.push_back({"paw", generate({Family::paw, {}})});
    instances.push_back({"C_5", generate({Family::cycle, {5}})});
    instances.push_back({"K_4", generate({Family::complete, {4}})});
    for (Instance& inst : corpus_instances(spec, 3)) instances.push_back(std::move(inst));
    for (const Instance& inst : instances) {
        const Graph& g = inst.g;
        const int n = g.order(), m = g.size(), k = n - 1;
        const int p = pendant_edge_count(g);
        std::int64_t expected = sz_penult_graph_paper(m, p);
        std::int64_t actual = sz_k(g, k);
        std::string witness;
        if (expected != actual) {
            SteinerTable table = build_steiner_table_any_k(g, k);
            for (const Edge& e : g.edges()) {
                bool pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
                EdgeClassification c = classify_edge(table, g, e, k);
                if (c.sz_term() == (pendant ? 2 : 1)) continue;
                witness = "edge=" + edge_str(e) + " (n_u,n_v,n_0)=(" + i64s(c.n_u) + "," +
                          i64s(c.n_v) + "," + i64s(c.n_0) + "); " +
                          subset_witness(table, g, e, k, /*want_equal=*/c.n_0 > 1);
                break;
            }
        }
        out.push_back(
            value_finding("thm4.2", inst.desc, k, "sz", i64s(expected), i64s(actual), witness));
        out.push_back(value_finding("thm4.2", inst.desc, k, "rsz",
                                    rsz_penult_graph_paper(m, p).str(), rsz_k(g, k).str(),
                                    witness));
    }
}

void check_thm51_part1(const CorpusSpec& spec, std::vector<Finding>& out) {
    std::vector<Instance> instances;
    instances.push_back({"C_4", generate({Family::cycle, {4}})});
    instances.push_back({"C_5", generate({Family::cycle, {5}})});
    instances.push_back({"K_4", generate({Family::complete, {4}})});
    instances.push_back({"K_5", generate({Family::complete, {5}})});
    for (int n = 3; n <= std::min(spec.max_n, 7); ++n)
        for (const Graph& g : connected_graph_corpus(n)) instances.push_back({g6_desc(g), g});
    for (const Instance& inst : instances) {
        const Graph& g = inst.g;
        const int n = g.order(), kappa = vertex_connectivity(g);
        for (int k : k_values(spec, 2, n - 1)) {
            if (kappa < n - k) continue;  // hypothesis "(n-k)-connected" not met
            std::int64_t actual = sz_k(g, k);
            std::string witness;
            if (actual != g.size()) {
                SteinerTable table = build_steiner_table_any_k(g, k);
                for (const Edge& e : g.edges()) {
                    EdgeClassification c = classify_edge(table, g, e, k);
                    if (c.n_u + c.n_v == 0) continue;
                    witness = "edge=" + edge_str(e) + " " +
                              subset_witness(table, g, e, k, /*want_equal=*/false);
                    break;
                }
            }
            out.push_back(value_finding("thm5.1-1", inst.desc, k, "sz",
                                        i64s(static_cast<std::int64_t>(g.size())), i64s(actual),
                                        witness));
        }
    }
}

void check_thm51_part2(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (const Instance& inst : corpus_instances(spec, 3)) {
        const Graph& g = inst.g;
        const int n = g.order();
        for (int k : k_values(spec, 2, n - 1)) {
            SzBounds b = sz_bounds(n, g.size(), k);
            std::int64_t actual = sz_k(g, k);
            Finding f;
            f.claim = "thm5.1-2";
            f.instance = inst.desc;
            f.k = k;
            f.index = "sz";
            f.expected = "[" + i64s(b.lower) + "," + i64s(b.upper) + "]";
            f.actual = i64s(actual);
            f.status = (actual >= b.lower && actual <= b.upper) ? FindingStatus::confirmed
                                                                : FindingStatus::counterexample;
            out.push_back(std::move(f));
        }
    }
}

void check_remark1(const CorpusSpec& spec, std::vector<Finding>& out) {
    for (int n = 3; n <= std::min(spec.max_n, 9); ++n) out.push_back(remark1_extremality(n));
}

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "thm2.1",  "ex2.1",     "ex2.2",     "thm3.1", "cor3.2",  "ex3.1-sz",
        "ex3.1-rsz", "ex3.2",   "thm3.3-sz", "thm3.3-n0", "thm4.1", "remark1",
        "thm4.2",  "thm5.1-1",  "thm5.1-2",  "conjecture"};
    return ids;
}

bool claim_is_sound(std::string_view claim) {
    static const std::vector<std::string_view> sound = {
        "thm2.1", "ex2.1",     "ex2.2",  "thm3.1",   "cor3.2", "ex3.1-sz",
        "ex3.2",  "thm3.3-sz", "thm4.1", "thm5.1-2", "remark1"};
    return std::find(sound.begin(), sound.end(), claim) != sound.end();
}

std::vector<Finding> verify_claim(const std::string& claim, const CorpusSpec& spec) {
    if (spec.max_n < 3 || spec.max_n > 10)
        throw std::invalid_argument("max_n out of range 3..10");
    std::vector<Finding> out;
    if (claim == "thm2.1")
        check_thm21(spec, out);
    else if (claim == "ex2.1")
        check_ex21(spec, out);
    else if (claim == "ex2.2")
        check_ex22(spec, out);
    else if (claim == "thm3.1")
        check_thm31(spec, out);
    else if (claim == "cor3.2")
        check_cor32(spec, out);
    else if (claim == "ex3.1-sz")
        check_ex31(spec, false, out);
    else if (claim == "ex3.1-rsz")
        check_ex31(spec, true, out);
    else if (claim == "ex3.2")
        check_ex32(spec, out);
    else if (claim == "thm3.3-sz")
        check_thm33_sz(spec, out);
    else if (claim == "thm3.3-n0")
        check_thm33_n0(spec, out);
    else if (claim == "thm4.1")
        check_thm41(spec, out);
    else if (claim == "remark1")
        check_remark1(spec, out);
    else if (claim == "thm4.2")
        check_thm42(spec, out);
    else if (claim == "thm5.1-1")
        check_thm51_part1(spec, out);
    else if (claim == "thm5.1-2")
        check_thm51_part2(spec, out);
    else if (claim == "conjecture")
        throw std::invalid_argument("the conjecture is scanned by conjecture_scan");
    else
        throw std::invalid_argument("unknown claim id: " + claim);
    return out;
}

ConjectureReport conjecture_scan(int n_max, int k) {
    if (n_max < 2 || n_max > 9) throw std::invalid_argument("n_max out of range 2..9");
    if (k < 3) throw std::invalid_argument("k must be at least 3 (k = 2 is the identity case)");
    ConjectureReport report;
    report.n_max = n_max;
    report.k = k;
    for (int n = std::max(3, k + 1); n <= n_max; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        std::vector<std::int64_t> szk(trees.size()), sz(trees.size());
        std::vector<std::string> desc(trees.size());
        for (std::size_t i = 0; i < trees.size(); ++i) {
            szk[i] = sz_k(trees[i], k);
            sz[i] = classical_szeged(trees[i]);
            desc[i] = g6_desc(trees[i]);
        }
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = i + 1; j < trees.size(); ++j) {
                ++report.pairs_checked;
                std::int64_t dk = szk[i] - szk[j];
                std::int64_t d2 = sz[i] - sz[j];
                if ((dk > 0 && d2 < 0) || (dk < 0 && d2 > 0)) {
                    report.violations.push_back(
                        {n, desc[i], desc[j], szk[i], szk[j], sz[i], sz[j]});
                } else if ((dk == 0) != (d2 == 0)) {
                    ++report.tie_pairs;
                }
            }
    }
    return report;
}

Finding remark1_extremality(int n) {
    if (n < 3 || n > 9) throw std::invalid_argument("remark1_extremality supports 3 <= n <= 9");
    std::vector<Graph> trees = enumerate_trees(n);
    QuarterRational star_value = QuarterRational::from_int(2 * (n - 1));
    QuarterRational path_value = QuarterRational::from_quarters(9ll * n - 11);
    Finding f;
    f.claim = "remark1";
    f.instance = "trees of order " + std::to_string(n);
    f.k = n - 1;
    f.index = "rsz";
    f.expected = "min=" + star_value.str() + "@star;max=" + path_value.str() + "@path";
    if (n == 3) {
        QuarterRational v = rsz_k(trees[0], 2);
        f.actual = "single tree, rsz=" + v.str();
        f.status = FindingStatus::confirmed;  // P_3 = S_3 is trivially both extremes
        return f;
    }
    std::vector<QuarterRational> values(trees.size());
    std::size_t min_i = 0, max_i = 0;
    int min_count = 0, max_count = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) values[i] = rsz_k(trees[i], n - 1);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (values[i] < values[min_i]) min_i = i;
        if (values[i] > values[max_i]) max_i = i;
    }
    for (const QuarterRational& v : values) {
        if (v == values[min_i]) ++min_count;
        if (v == values[max_i]) ++max_count;
    }
    auto shape = [&](const Graph& t) {
        int max_deg = 0;
        for (int v = 0; v < t.order(); ++v) max_deg = std::max(max_deg, t.degree(v));
        if (max_deg == t.order() - 1) return std::string("star");
        if (max_deg <= 2) return std::string("path");
        return g6_desc(t);
    };
    f.actual = "min=" + values[min_i].str() + "@" + shape(trees[min_i]) +
               (min_count == 1 ? "" : "(not unique)") + ";max=" + values[max_i].str() + "@" +
               shape(trees[max_i]) + (max_count == 1 ? "" : "(not unique)");
    bool ok = min_count == 1 && max_count == 1 && shape(trees[min_i]) == "star" &&
              shape(trees[max_i]) == "path" && values[min_i] == star_value &&
              values[max_i] == path_value;
    f.status = ok ? FindingStatus::confirmed : FindingStatus::counterexample;
    if (!ok) f.witness = "exhaustive scan over " + std::to_string(trees.size()) + " trees";
    return f;
}

}  // namespace steiner
