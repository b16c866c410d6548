#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toughtree/core.hpp"
#include "toughtree/generators.hpp"
#include "toughtree/hamilton.hpp"
#include "toughtree/io.hpp"
#include "toughtree/oracles.hpp"
#include "toughtree/squares.hpp"
#include "toughtree/twdp.hpp"

using nlohmann::json;
using namespace toughtree;

namespace {


// Seeded instance generators for the verify suites (mirrors the test corpus).
Graph rnd_ktree(int k, int n, std::mt19937& rng) {
    Graph g(n);
    std::vector<std::vector<int>> cliques;
    for (int i = 0; i <= k && i < n; ++i)
        for (int j = 0; j < i; ++j) g.add_edge(i, j);
    for (int i = 0; i <= k; ++i) {
        std::vector<int> c;
        for (int j = 0; j <= k; ++j)
            if (j != i) c.push_back(j);
        cliques.push_back(c);
    }
    for (int v = k + 1; v < n; ++v) {
        auto c = cliques[rng() % cliques.size()];
        for (int u : c) g.add_edge(v, u);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> nc;
            for (int j = 0; j < k; ++j)
                if (j != drop) nc.push_back(c[j]);
            nc.push_back(v);
            cliques.push_back(nc);
        }
    }
    return g;
}

Graph rnd_tree(int n, int max_degree, std::mt19937& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::vector<int> ok;
        for (int u = 0; u < v; ++u)
            if (g.degree(u) < max_degree) ok.push_back(u);
        g.add_edge(v, ok[rng() % ok.size()]);
    }
    return g;
}

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("TOUGHTREE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

void emit(const io::GraphDocument& doc, const std::string& out, const std::string& dot) {
    if (out.empty())
        std::cout << io::to_json(doc);
    else
        io::write_file(out, doc);
    if (!dot.empty()) {
        std::ofstream f(dot);
        if (!f) throw std::runtime_error("cannot open " + dot + " for writing");
        f << io::to_dot(doc.graph);
    }
}

io::GraphDocument wrap(Graph g, int k) {
    io::GraphDocument doc;
    doc.graph = std::move(g);
    if (k > 0) {
        doc.k = k;
        doc.certificate = core::recognize_ktree(doc.graph, k);
    }
    return doc;
}

json witness_json(const PathWitness& w) {
    json j;
    j["vertices"] = w.seq;
    j["cyclic"] = w.cyclic;
    return j;
}

std::vector<int> label_weights(const Graph& g, const std::string& tag) {
    std::vector<int> w(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.label(v) == tag) w[v] = 1;
    return w;
}

struct ShortnessRow {
    std::string family;
    int level = 0;
    std::int64_t n = 0;
    std::int64_t cycle = 0;
    bool closed_form = false;
};

double ratio_of(const ShortnessRow& r) {
    return std::log(static_cast<double>(r.cycle)) / std::log(static_cast<double>(r.n));
}

void print_table(const std::vector<ShortnessRow>& rows, const std::string& limit_note) {
    std::printf("%-14s %6s %12s %12s %8s %s\n", "family", "level", "n", "cycle", "ratio",
                "source");
    for (const auto& r : rows)
        std::printf("%-14s %6d %12lld %12lld %8.4f %s\n", r.family.c_str(), r.level,
                    static_cast<long long>(r.n), static_cast<long long>(r.cycle), ratio_of(r),
                    r.closed_form ? "closed-form" : "dp");
    if (!limit_note.empty()) std::printf("%s\n", limit_note.c_str());
}

int run_shortness(const std::string& family, int max_level, bool closed_form) {
    std::vector<ShortnessRow> rows;
    std::string note;
    if (family == "h-family") {
        for (int lv = 0; lv <= max_level; ++lv) {
            auto m = generators::family_metrics(lv);
            ShortnessRow row{family, lv, m.f, m.c, true};
            if (!closed_form) {
                if (lv > 1) {
                    std::cerr << "level " << lv
                              << " is outside the DP range; rerun with --closed-form\n";
                    return 2;
                }
                Graph g = generators::build_Hn(lv);
                row.n = g.num_vertices();
                row.cycle = twdp::longest_cycle(g).value;
                row.closed_form = false;
            }
            rows.push_back(row);
        }
        double limit = std::log(22.0) / std::log(30.0);
        char buf[96];
        std::snprintf(buf, sizeof buf, "limit ratio: log_30 22 = %.4f", limit);
        note = buf;
    } else if (family == "cubic-square") {
        for (int r = 1; r <= max_level; ++r) {
            ShortnessRow row{family, r, 3ll * (1ll << r) - 2, 4ll * r, true};
            if (!closed_form) {
                if (r > 6) {
                    std::cerr << "r " << r
                              << " is outside the DP range; rerun with --closed-form\n";
                    return 2;
                }
                Graph s = generators::square(generators::balanced_cubic_tree(r));
                row.n = s.num_vertices();
                row.cycle = twdp::longest_cycle(s).value;
                row.closed_form = false;
            }
            rows.push_back(row);
        }
        note = "limit ratio: 0 (vanishing)";
    } else {
        std::cerr << "unknown family " << family << "\n";
        return 2;
    }
    print_table(rows, note);
    return 0;
}

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

SuiteResult suite_h0() {
    auto rep = generators::validate_H0(generators::build_H0());
    SuiteResult r{"h0", rep.pass, ""};
    for (auto& [name, ok] : rep.checks)
        if (!ok) {
            r.detail = "first violated check: " + name;
            break;
        }
    return r;
}

SuiteResult suite_oracle_equivalence(unsigned seed) {
    std::mt19937 rng(seed);
    SuiteResult r{"oracle-equivalence", true, ""};
    for (int rep = 0; rep < 60 && r.pass; ++rep) {
        int k = 2 + static_cast<int>(rng() % 3);
        int n = k + 2 + static_cast<int>(rng() % (13 - k));
        Graph g = rnd_ktree(k, n, rng);
        if (twdp::longest_path(g).value != oracles::bf_longest_path(g) ||
            twdp::longest_cycle(g).value != oracles::bf_longest_cycle(g) ||
            twdp::toughness_exact(g).value != oracles::bf_toughness(g).value) {
            r.pass = false;
            r.detail = "mismatch on instance " + std::to_string(rep);
        }
    }
    return r;
}

SuiteResult suite_squares(unsigned seed) {
    std::mt19937 rng(seed);
    SuiteResult r{"squares", true, ""};
    for (int rep = 0; rep < 120 && r.pass; ++rep) {
        int n = 6 + static_cast<int>(rng() % 15);
        Graph t = rnd_tree(n, 4, rng);
        Graph s = generators::square(t);
        bool cyc = n >= 3 && twdp::longest_cycle(s).value == n;
        bool pth = twdp::longest_path(s).value == n;
        if (squares::square_is_hamiltonian(t) != cyc ||
            squares::square_has_hamilton_path(t) != pth) {
            r.pass = false;
            r.detail = "characterization mismatch on instance " + std::to_string(rep);
        }
    }
    return r;
}

SuiteResult suite_hamilton(unsigned seed) {
    std::mt19937 rng(seed);
    SuiteResult r{"hamilton", true, ""};
    for (int rep = 0; rep < 40 && r.pass; ++rep) {
        int k = 2 + static_cast<int>(rng() % 3);
        int n = k + 3 + static_cast<int>(rng() % 9);
        Graph g = rnd_ktree(k, n, rng);
        auto tough = twdp::toughness_exact(g);
        if (!tough.value.is_infinite() && !(Rational(k, 3) < tough.value)) continue;
        try {
            PathWitness w = hamilton::hamilton_cycle(g, k);
            if (!validate_path_witness(g, w, true)) {
                r.pass = false;
                r.detail = "invalid cycle witness on instance " + std::to_string(rep);
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
    }
    return r;
}

int run_verify(const std::string& suite, unsigned seed) {
    std::vector<std::function<SuiteResult()>> jobs;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("h0")) jobs.push_back(suite_h0);
    if (want("oracle-equivalence")) jobs.push_back([seed] { return suite_oracle_equivalence(seed); });
    if (want("squares")) jobs.push_back([seed] { return suite_squares(seed); });
    if (want("hamilton")) jobs.push_back([seed] { return suite_hamilton(seed); });
    if (jobs.empty()) {
        std::cerr << "unknown suite " << suite << "\n";
        return 2;
    }
    int budget = thread_budget();
    std::vector<SuiteResult> results(jobs.size());
    if (budget > 1 && jobs.size() > 1) {
        std::vector<std::future<SuiteResult>> futs;
        for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    }
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toughtree: k-tree and tree-square family toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    gen->require_subcommand(1);
    std::string out, dot;
    int level = 0, karg = 0, rarg = 1;
    std::string block_path;
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", out, "output JSON path (default stdout)");
        c->add_option("--dot", dot, "also write DOT to this path");
    };
    auto* gh = gen->add_subcommand("h-family", "triangulated-polygon family member");
    gh->add_option("--level", level, "expansion level")->required();
    add_out(gh);
    auto* ghnk = gen->add_subcommand("hnk", "family member plus universal vertices");
    ghnk->add_option("--level", level)->required();
    ghnk->add_option("--k", karg, "target treewidth parameter, >= 4")->required();
    add_out(ghnk);
    auto* gcs = gen->add_subcommand("cubic-square", "square of a balanced cubic tree");
    gcs->add_option("--r", rarg, "leaf depth")->required();
    add_out(gcs);
    auto* gb3 = gen->add_subcommand("basic-3twig", "K_{k+1} plus three simplicial vertices");
    gb3->add_option("--k", karg)->required();
    add_out(gb3);
    auto* gar = gen->add_subcommand("arranged", "arranged-block expansion");
    gar->add_option("--block", block_path, "block JSON file")->required();
    gar->add_option("--level", level)->required();
    add_out(gar);

    // analyze
    auto* an = app.add_subcommand("analyze", "exact analysis of a graph JSON file");
    an->require_subcommand(1);
    std::string in_path, weight_label, check = "hamilton";
    int from = -1, to = -1;
    bool brute = false;
    auto add_in = [&](CLI::App* c, bool with_brute = false) {
        c->add_option("--in", in_path, "input graph JSON")->required();
        if (with_brute) c->add_flag("--brute-force", brute, "use the oracle instead of the DP");
    };
    auto* alp = an->add_subcommand("longest-path", "maximum path");
    add_in(alp, true);
    alp->add_option("--weight-label", weight_label, "count only vertices with this label");
    auto* alc = an->add_subcommand("longest-cycle", "maximum cycle");
    add_in(alc, true);
    alc->add_option("--weight-label", weight_label);
    auto* atg = an->add_subcommand("toughness", "exact rational toughness");
    add_in(atg, true);
    auto* ahe = an->add_subcommand("hamilton-path-exists", "DP existence between endpoints");
    add_in(ahe);
    ahe->add_option("--from", from)->required();
    ahe->add_option("--to", to)->required();
    auto* ahp = an->add_subcommand("hamilton-path", "constructive witness between endpoints");
    add_in(ahp);
    ahp->add_option("--from", from)->required();
    ahp->add_option("--to", to)->required();
    ahp->add_option("--k", karg, "k-tree parameter (default: file's k field)");
    auto* ahc = an->add_subcommand("hamilton-cycle", "constructive cycle witness");
    add_in(ahc);
    ahc->add_option("--k", karg);
    auto* ath = an->add_subcommand("theta-spanner", "three-path spanner between endpoints");
    add_in(ath);
    ath->add_option("--from", from)->required();
    ath->add_option("--to", to)->required();
    ath->add_option("--k", karg);
    auto* ats = an->add_subcommand("tree-square", "forbidden-pattern verdicts for a tree");
    add_in(ats);
    ats->add_option("--check", check, "hamilton | path | patterns | structure");

    // shortness-table
    auto* st = app.add_subcommand("shortness-table", "cycle-length ratio table");
    std::string family;
    int max_level = 0;
    bool closed_form = false;
    st->add_option("--family", family, "h-family | cubic-square")->required();
    st->add_option("--max-level", max_level)->required();
    st->add_flag("--closed-form", closed_form, "use the counting formulas for all rows");

    // verify
    auto* vf = app.add_subcommand("verify", "self-check suites");
    std::string suite = "all";
    unsigned seed = 20260826;
    vf->add_option("suite", suite, "h0 | oracle-equivalence | squares | hamilton | all");
    vf->add_option("--seed", seed, "seed for the randomized suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gh->parsed()) {
            emit(wrap(generators::build_Hn(level), 3), out, dot);
        } else if (ghnk->parsed()) {
            emit(wrap(generators::build_Hnk(level, karg), karg), out, dot);
        } else if (gcs->parsed()) {
            emit(wrap(generators::square(generators::balanced_cubic_tree(rarg)), 0), out, dot);
        } else if (gb3->parsed()) {
            emit(wrap(generators::basic_3twig(karg), karg), out, dot);
        } else if (gar->parsed()) {
            io::GraphDocument bd = io::read_file(block_path);
            std::ifstream bf(block_path);
            json bj = json::parse(bf);
            generators::ArrangedBlock blk;
            blk.g0 = bd.graph;
            blk.j = blk.g0.num_vertices();
            blk.white = bj.at("white").get<std::vector<int>>();
            blk.outer = bj.at("outer").get<std::vector<int>>();
            blk.k = bj.at("cycle_bound").get<int>();
            if (!generators::validate_arranged_block(blk))
                throw std::invalid_argument("invalid arranged block");
            emit(wrap(generators::arranged_block_expand(blk, level), 0), out, dot);
        } else if (an->parsed()) {
            io::GraphDocument doc = io::read_file(in_path);
            const Graph& g = doc.graph;
            if (karg == 0 && doc.k) karg = *doc.k;
            json rep;
            if (alp->parsed() || alc->parsed()) {
                std::vector<int> w;
                const std::vector<int>* wp = nullptr;
                if (!weight_label.empty()) {
                    w = label_weights(g, weight_label);
                    wp = &w;
                }
                if (brute) {
                    rep["value"] = alp->parsed() ? oracles::bf_longest_path(g, wp)
                                                 : oracles::bf_longest_cycle(g, wp);
                    rep["source"] = "oracle";
                } else {
                    auto res = alp->parsed() ? twdp::longest_path(g, wp)
                                             : twdp::longest_cycle(g, wp);
                    rep["value"] = res.value;
                    rep["witness"] = witness_json(res.witness);
                    rep["source"] = "dp";
                }
            } else if (atg->parsed()) {
                auto res = brute ? oracles::bf_toughness(g) : twdp::toughness_exact(g);
                rep["toughness"] = res.value.str();
                rep["witness"] = res.witness;
                rep["components"] = res.components;
                rep["source"] = brute ? "oracle" : "dp";
            } else if (ahe->parsed()) {
                rep["exists"] = twdp::has_hamilton_path_between(g, from, to);
            } else if (ahp->parsed()) {
                rep["witness"] = witness_json(hamilton::hamilton_path_between(g, karg, from, to));
            } else if (ahc->parsed()) {
                rep["witness"] = witness_json(hamilton::hamilton_cycle(g, karg));
            } else if (ath->parsed()) {
                auto sp = hamilton::theta_spanner(g, karg, from, to);
                rep["x1"] = sp.x1;
                rep["x2"] = sp.x2;
                rep["paths"] = json::array({sp.paths[0], sp.paths[1], sp.paths[2]});
                rep["valid"] = hamilton::validate_theta_spanner(g, sp);
            } else if (ats->parsed()) {
                if (check == "hamilton") {
                    rep["square_hamiltonian"] = squares::square_is_hamiltonian(g);
                } else if (check == "path") {
                    rep["square_hamilton_path"] = squares::square_has_hamilton_path(g);
                } else if (check == "patterns") {
                    auto names = {std::pair{squares::PatternKind::SK13, "SK13"},
                                  std::pair{squares::PatternKind::SK15, "SK15"},
                                  std::pair{squares::PatternKind::FamilyF, "FamilyF"},
                                  std::pair{squares::PatternKind::FamilyX, "FamilyX"}};
                    for (auto [kind, name] : names) {
                        auto p = squares::find_pattern(g, kind);
                        rep[name] = p ? json(p->vertices) : json(nullptr);
                    }
                } else if (check == "structure") {
                    auto sr = squares::square_structure_report(g);
                    rep["chordal"] = sr.chordal;
                    rep["planar"] = sr.planar;
                } else {
                    throw std::invalid_argument("unknown --check " + check);
                }
            }
            std::cout << rep.dump(2) << "\n";
        } else if (st->parsed()) {
            return run_shortness(family, max_level, closed_form);
        } else if (vf->parsed()) {
            return run_verify(suite, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
