// rainbowtree: enumeration, edge-flip and rainbow-coloring checks for the
// comparability of trees in edge-colored complete graphs.
//
// One binary, git-style subcommands. Every subcommand takes --json for
// machine-readable output; randomness always flows from an explicit --seed,
// so identical invocations produce identical reports (elapsed_ms excepted).
// Exit codes: 0 success (or "nothing found" for search modes), 1 a check or
// search came back negative, 2 usage or input errors.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/enumerate.hpp"
#include "rainbow/flip.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/tree_io.hpp"
#include "rainbow/witness.hpp"

using json = nlohmann::ordered_json;
using namespace rainbow;

namespace {

constexpr const char *kVersion = "rainbowtree 0.1.0";

json edge_json(Edge e) { return json::array({e.first, e.second}); }

json code_pair_json(const OrderedCodePair &pair, int order) {
    json out;
    out["t1"] = pair.t1;
    out["t2"] = pair.t2;
    std::string f1 = family_annotation(pair.t1, order);
    std::string f2 = family_annotation(pair.t2, order);
    if (!f1.empty()) out["t1_family"] = f1;
    if (!f2.empty()) out["t2_family"] = f2;
    return out;
}

json embedding_json(const std::optional<RainbowEmbedding> &embedding) {
    if (!embedding) return nullptr;
    return json(embedding->map);
}

void emit(const json &report) { std::cout << report.dump(2) << "\n"; }

struct TreesEnumCmd {
    int order = 0;
    std::string out;
    bool as_json = false;

    int run() const {
        TreeCatalog catalog = enumerate_trees(order);
        if (!out.empty()) {
            std::ofstream file(out);
            if (!file) throw ParseError("cannot open output file: " + out);
            for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
                if (i) file << "\n";
                write_tree(file, catalog.representatives[i]);
            }
        }
        if (as_json) {
            json report;
            report["order"] = order;
            report["count"] = catalog.representatives.size();
            json trees = json::array();
            for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
                json entry;
                entry["code"] = catalog.codes[i];
                json edges = json::array();
                for (Edge e : catalog.representatives[i].edges()) edges.push_back(edge_json(e));
                entry["edges"] = edges;
                trees.push_back(entry);
            }
            report["trees"] = trees;
            emit(report);
        } else if (out.empty()) {
            for (std::size_t i = 0; i < catalog.representatives.size(); ++i) {
                if (i) std::cout << "\n";
                write_tree(std::cout, catalog.representatives[i]);
            }
        } else {
            std::cout << catalog.representatives.size() << " trees of order " << order
                      << " written to " << out << "\n";
        }
        return 0;
    }
};

struct TreesFamilyCmd {
    std::string spec;
    std::string out;
    bool as_json = false;

    int run() const {
        FamilySpec parsed = parse_family_spec(spec);
        Tree t = family(parsed);
        if (!out.empty()) write_tree_file(out, t);
        if (as_json) {
            json report;
            report["spec"] = to_string(parsed);
            report["order"] = t.order();
            report["code"] = canonical_code(t);
            report["degree_sequence"] = degree_sequence(t);
            if (!out.empty()) report["out"] = out;
            emit(report);
        } else {
            std::cout << to_string(parsed) << " order=" << t.order()
                      << " code=" << canonical_code(t) << "\n";
        }
        return 0;
    }
};

struct FlipCheckCmd {
    std::string t1_path, t2_path;
    bool as_json = false;

    int run() const {
        Tree t1 = read_tree_file(t1_path);
        Tree t2 = read_tree_file(t2_path);
        FlipReport report = satisfies_flip_condition(t1, t2);
        if (as_json) {
            json out;
            out["t1"] = report.t1_code;
            out["t2"] = report.t2_code;
            out["satisfied"] = report.satisfied;
            json per_edge = json::array();
            for (const auto &entry : report.per_edge) {
                json item;
                item["removed"] = edge_json(entry.removed);
                item["witness"] = entry.witness ? edge_json(*entry.witness) : json(nullptr);
                per_edge.push_back(item);
            }
            out["per_edge"] = per_edge;
            emit(out);
        } else {
            for (const auto &entry : report.per_edge) {
                std::cout << "edge (" << entry.removed.first << "," << entry.removed.second
                          << "): ";
                if (entry.witness)
                    std::cout << "witness (" << entry.witness->first << ","
                              << entry.witness->second << ")\n";
                else
                    std::cout << "no witness\n";
            }
            std::cout << (report.satisfied ? "satisfied" : "not satisfied") << "\n";
        }
        return report.satisfied ? 0 : 1;
    }
};

struct Thm1VerifyCmd {
    int order = 0;
    int jobs = 1;
    bool as_json = false;

    int run() const {
        PairClassification result = verify_thm1(order, jobs);
        if (as_json) {
            json out;
            out["order"] = result.order;
            out["match"] = result.match;
            auto pack = [&](const std::vector<OrderedCodePair> &pairs) {
                json arr = json::array();
                for (const auto &p : pairs) arr.push_back(code_pair_json(p, order));
                return arr;
            };
            out["found"] = pack(result.found_pairs);
            out["expected"] = pack(result.expected);
            out["extra"] = pack(result.extra);
            out["missing"] = pack(result.missing);
            out["same_degree_sequence"] = pack(result.same_ds_pairs);
            emit(out);
        } else {
            std::cout << "order " << order << ": found " << result.found_pairs.size()
                      << " pairs, expected " << result.expected.size() << ", match="
                      << (result.match ? "true" : "false") << "\n";
            for (const auto &p : result.found_pairs) {
                std::string f1 = family_annotation(p.t1, order);
                std::string f2 = family_annotation(p.t2, order);
                std::cout << "  (" << (f1.empty() ? p.t1 : f1) << ", "
                          << (f2.empty() ? p.t2 : f2) << ")\n";
            }
        }
        return result.match ? 0 : 1;
    }
};

struct RainbowFindCmd {
    std::string coloring_path, pattern_path;
    bool as_json = false;

    int run() const {
        ColoredComplete host = read_coloring_file(coloring_path);
        Tree pattern = read_tree_file(pattern_path);
        SearchStats stats;
        auto embedding = find_rainbow(host, pattern, &stats);
        if (as_json) {
            json out;
            out["found"] = embedding.has_value();
            out["embedding"] = embedding_json(embedding);
            out["nodes_searched"] = stats.nodes;
            emit(out);
        } else if (embedding) {
            std::cout << "rainbow copy found:";
            for (int h : embedding->map) std::cout << ' ' << h;
            std::cout << "\n";
        } else {
            std::cout << "rainbow-free\n";
        }
        return embedding ? 0 : 1;
    }
};

struct WitnessBuildCmd {
    std::string kind;
    std::string t2_path;
    std::string f1;
    std::string f1_heuristic;
    int k = 0;
    int colors = 0;
    std::string out;
    bool as_json = false;

    ColoredComplete build() const {
        if (kind == "star") return star_witness(colors);
        if (kind == "fk") return fk_witness(k, colors);
        if (kind == "bstar") return bstar_witness(k, colors);
        if (kind != "lemma1") throw BadParam("unknown witness kind: " + kind);
        if (t2_path.empty()) throw BadParam("lemma1 witness needs --t2");
        Tree t2 = read_tree_file(t2_path);
        std::vector<Edge> order;
        if (!f1_heuristic.empty()) {
            if (f1_heuristic != "components")
                throw BadParam("unknown --f1-heuristic: " + f1_heuristic);
            order = component_balanced_edge_order(t2);
        } else {
            order = t2.edges();
            if (!f1.empty()) {
                std::istringstream in(f1);
                int u = -1, v = -1;
                if (!(in >> u >> v)) throw BadParam("--f1 expects \"u v\"");
                auto it = std::find(order.begin(), order.end(), make_edge(u, v));
                if (it == order.end()) throw BadEdgeOrder("--f1 edge not in T2");
                std::iter_swap(order.begin(), it);
            }
        }
        return lemma1_witness(t2, order, colors);
    }

    int run() const {
        ColoredComplete witness = build();
        write_coloring_file(out, witness);
        if (as_json) {
            json report;
            report["kind"] = kind;
            report["t"] = colors;
            report["order"] = witness.order();
            report["out"] = out;
            emit(report);
        } else {
            std::cout << kind << " witness on " << witness.order() << " vertices with "
                      << colors << " colors written to " << out << "\n";
        }
        return 0;
    }
};

struct WitnessVerifyCmd {
    std::string coloring_path, t1_path, t2_path;
    int colors = 0;
    bool as_json = false;

    int run() const {
        ColoredComplete coloring = read_coloring_file(coloring_path);
        Tree t1 = read_tree_file(t1_path);
        Tree t2 = read_tree_file(t2_path);
        VerificationReport report = verify_nonle(coloring, t1, t2, colors);
        if (as_json) {
            json out;
            out["kind"] = "coloring-file";
            out["t"] = colors;
            out["color_count_ok"] = report.color_count_ok;
            out["contains_target"] = report.contains_target;
            out["free_of_pattern"] = report.free_of_pattern;
            out["embedding"] = embedding_json(report.embedding);
            out["elapsed_ms"] = report.elapsed.count();
            out["nodes_searched"] = report.nodes_searched;
            emit(out);
        } else {
            std::cout << "color_count_ok=" << report.color_count_ok
                      << " contains_target=" << report.contains_target
                      << " free_of_pattern=" << report.free_of_pattern << "\n";
        }
        return report.ok() ? 0 : 1;
    }
};

struct TwCheckCmd {
    bool exhaustive = false;
    int order = 0;
    int trials = 1000;
    std::uint64_t seed = 0;
    bool as_json = false;

    int run() const {
        if (exhaustive) {
            std::uint64_t partitions = 0;
            bool pass = tw_exhaustive_k4(&partitions);
            if (as_json) {
                json out;
                out["mode"] = "exhaustive";
                out["partitions"] = partitions;
                out["pass"] = pass;
                emit(out);
            } else {
                std::cout << "exhaustive K4: " << partitions << " partitions, "
                          << (pass ? "pass" : "FAIL") << "\n";
            }
            return pass ? 0 : 1;
        }
        if (order < 4) throw OrderOutOfRange("tw check: need --order >= 4");
        bool pass = tw_randomized(order, trials, seed);
        if (as_json) {
            json out;
            out["mode"] = "randomized";
            out["order"] = order;
            out["trials"] = trials;
            out["seed"] = seed;
            out["pass"] = pass;
            emit(out);
        } else {
            std::cout << "randomized order=" << order << " trials=" << trials << ": "
                      << (pass ? "pass" : "FAIL") << "\n";
        }
        return pass ? 0 : 1;
    }
};

struct SearchCounterexampleCmd {
    std::string t1_path, t2_path;
    int order = 0;
    int colors = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string out;
    bool as_json = false;

    int run() const {
        Tree t1 = read_tree_file(t1_path);
        Tree t2 = read_tree_file(t2_path);
        auto found = counterexample_search(t1, t2, order, colors, trials, seed);
        if (found && !out.empty()) write_coloring_file(out, *found);
        if (as_json) {
            json report;
            report["found"] = found.has_value();
            report["order"] = order;
            report["colors_required"] = colors;
            if (found) {
                report["colors_used"] = found->num_colors();
                if (!out.empty()) report["out"] = out;
            }
            emit(report);
        } else if (found) {
            std::cout << "witness coloring found (" << found->num_colors() << " colors)";
            if (!out.empty()) std::cout << ", written to " << out;
            std::cout << "\n";
        } else {
            std::cout << "nothing found (proves nothing)\n";
        }
        // 0 = nothing found; 1 = a verified witness exists
        return found ? 1 : 0;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"verification toolkit for rainbow-forbidden-subgraph comparisons of trees"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int exit_code = 0;

    auto *trees = app.add_subcommand("trees", "tree enumeration and named families");
    trees->require_subcommand(1);
    TreesEnumCmd trees_enum;
    {
        auto *cmd = trees->add_subcommand("enum",
                                          "one representative per isomorphism class");
        cmd->add_option("--order", trees_enum.order, "tree order (1..16)")->required();
        cmd->add_option("--out", trees_enum.out, "write blocks to a file");
        cmd->add_flag("--json", trees_enum.as_json, "JSON report");
        cmd->callback([&] { exit_code = trees_enum.run(); });
    }
    TreesFamilyCmd trees_family;
    {
        auto *cmd = trees->add_subcommand("family", "construct a named family tree");
        cmd->add_option("--spec", trees_family.spec, "family spec, e.g. F:3 or B_star:2,2")
            ->required();
        cmd->add_option("--out", trees_family.out, "write the tree to a file");
        cmd->add_flag("--json", trees_family.as_json, "JSON report");
        cmd->callback([&] { exit_code = trees_family.run(); });
    }

    auto *flip = app.add_subcommand("flip", "edge-flip predicate");
    flip->require_subcommand(1);
    FlipCheckCmd flip_check;
    {
        auto *cmd = flip->add_subcommand(
            "check", "does every edge of T2 flip into a copy of T1? (exit 1 if not)");
        cmd->add_option("--t1", flip_check.t1_path, "tree file")->required();
        cmd->add_option("--t2", flip_check.t2_path, "tree file")->required();
        cmd->add_flag("--json", flip_check.as_json, "JSON report");
        cmd->callback([&] { exit_code = flip_check.run(); });
    }

    auto *thm1 = app.add_subcommand("thm1", "same-order characterization checks");
    thm1->require_subcommand(1);
    Thm1VerifyCmd thm1_verify;
    {
        auto *cmd = thm1->add_subcommand(
            "verify", "exhaustively compare flip-condition pairs against the family list");
        cmd->add_option("--order", thm1_verify.order, "tree order (5..12)")->required();
        cmd->add_option("--jobs", thm1_verify.jobs, "worker threads (output-invariant)");
        cmd->add_flag("--json", thm1_verify.as_json, "JSON report");
        cmd->callback([&] { exit_code = thm1_verify.run(); });
    }

    auto *rainbow_cmd = app.add_subcommand("rainbow", "rainbow subgraph search");
    rainbow_cmd->require_subcommand(1);
    RainbowFindCmd rainbow_find;
    {
        auto *cmd = rainbow_cmd->add_subcommand(
            "find", "search a coloring for a rainbow copy of a pattern tree (exit 1 if free)");
        cmd->add_option("--coloring", rainbow_find.coloring_path, "coloring file")->required();
        cmd->add_option("--pattern", rainbow_find.pattern_path, "pattern tree file")->required();
        cmd->add_flag("--json", rainbow_find.as_json, "JSON report");
        cmd->callback([&] { exit_code = rainbow_find.run(); });
    }

    auto *witness = app.add_subcommand("witness", "explicit witness colorings");
    witness->require_subcommand(1);
    WitnessBuildCmd witness_build;
    {
        auto *cmd = witness->add_subcommand("build", "construct a witness coloring");
        cmd->add_option("--kind", witness_build.kind, "lemma1|star|fk|bstar")->required();
        cmd->add_option("--t2", witness_build.t2_path, "tree file (lemma1 only)");
        cmd->add_option("--f1", witness_build.f1,
                        "edge \"u v\" of T2 to order first (lemma1 only)");
        cmd->add_option("--f1-heuristic", witness_build.f1_heuristic,
                        "f1 choice heuristic: components = first edge leaving two "
                        "components of size >= 2");
        cmd->add_option("--k", witness_build.k, "family parameter (fk, bstar)");
        cmd->add_option("--colors", witness_build.colors, "total colors t")->required();
        cmd->add_option("--out", witness_build.out, "output coloring file")->required();
        cmd->add_flag("--json", witness_build.as_json, "JSON report");
        cmd->callback([&] { exit_code = witness_build.run(); });
    }
    WitnessVerifyCmd witness_verify;
    {
        auto *cmd = witness->add_subcommand(
            "verify", "check palette size, rainbow T2 presence and rainbow T1 freeness "
                      "(exit 1 unless all three hold)");
        cmd->add_option("--coloring", witness_verify.coloring_path, "coloring file")->required();
        cmd->add_option("--t1", witness_verify.t1_path, "forbidden pattern tree")->required();
        cmd->add_option("--t2", witness_verify.t2_path, "target tree")->required();
        cmd->add_option("--colors", witness_verify.colors, "expected palette size")->required();
        cmd->add_flag("--json", witness_verify.as_json, "JSON report");
        cmd->callback([&] { exit_code = witness_verify.run(); });
    }

    auto *tw = app.add_subcommand("tw", "rainbow P4 checks");
    tw->require_subcommand(1);
    TwCheckCmd tw_check;
    {
        auto *cmd = tw->add_subcommand(
            "check", "every >=4-colored complete graph has a rainbow P4 (exit 1 on violation)");
        cmd->add_flag("--exhaustive", tw_check.exhaustive, "all 81 colorings of K4");
        cmd->add_option("--order", tw_check.order, "host order for randomized mode");
        cmd->add_option("--trials", tw_check.trials, "randomized trials (default 1000)");
        cmd->add_option("--seed", tw_check.seed, "master seed (default 0)");
        cmd->add_flag("--json", tw_check.as_json, "JSON report");
        cmd->callback([&] { exit_code = tw_check.run(); });
    }

    auto *search = app.add_subcommand("search", "exploratory searches");
    search->require_subcommand(1);
    SearchCounterexampleCmd search_cmd;
    {
        auto *cmd = search->add_subcommand(
            "counterexample",
            "look for a coloring that is rainbow-T1-free, keeps >= t colors and contains a "
            "rainbow T2; exit 0 = nothing found (proves nothing), exit 1 = verified witness");
        cmd->add_option("--t1", search_cmd.t1_path, "tree file")->required();
        cmd->add_option("--t2", search_cmd.t2_path, "tree file")->required();
        cmd->add_option("--order", search_cmd.order, "host order")->required();
        cmd->add_option("--colors", search_cmd.colors, "minimum palette size t")->required();
        cmd->add_option("--trials", search_cmd.trials, "random restarts (default 1)");
        cmd->add_option("--seed", search_cmd.seed, "master seed (default 0)");
        cmd->add_option("--out", search_cmd.out, "write a found coloring here");
        cmd->add_flag("--json", search_cmd.as_json, "JSON report");
        cmd->callback([&] { exit_code = search_cmd.run(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
