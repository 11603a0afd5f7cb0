// Command-line front end: counting, family construction, generation,
// ranking and claim verification with plain / json / csv output.
//
// Exit codes: 0 success or verified pass, 1 verification failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dissoc/canonical.hpp"
#include "dissoc/dissoc_count.hpp"
#include "dissoc/families.hpp"
#include "dissoc/generate.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/verify.hpp"

namespace {

using namespace dissoc;

constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_usage = 2;

struct InputSource {
    std::string g6;
    std::string file;
    bool use_stdin = false;
    bool lenient = false;
    std::string family;

    int sources() const {
        return (g6.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (use_stdin ? 1 : 0) +
               (family.empty() ? 0 : 1);
    }

    std::vector<Graph> load() const {
        if (sources() != 1)
            throw CLI::ValidationError("input", "choose exactly one of --g6/--file/--stdin/--family");
        if (!g6.empty()) return {parse_graph6(g6)};
        if (!family.empty()) return parse_family_spec(family);
        std::ifstream file_in;
        if (!file.empty()) {
            file_in.open(file);
            if (!file_in) throw std::runtime_error("cannot open " + file);
        }
        Graph6Reader reader(use_stdin ? std::cin : file_in, !lenient);
        std::vector<Graph> graphs;
        while (auto g = reader.next()) graphs.push_back(std::move(*g));
        for (const auto& [line, what] : reader.skipped())
            std::cerr << "skipped line " << line << ": " << what << "\n";
        return graphs;
    }
};

void add_input_flags(CLI::App* cmd, InputSource& src, bool with_family = true) {
    cmd->add_option("--g6", src.g6, "inline graph6 string");
    cmd->add_option("--file", src.file, "file of graph6 lines");
    cmd->add_flag("--stdin", src.use_stdin, "read graph6 lines from standard input");
    cmd->add_flag("--lenient", src.lenient,
                  "skip malformed graph6 lines (reported to stderr) instead of aborting");
    if (with_family)
        cmd->add_option("--family", src.family, "family spec (" + family_spec_grammar() + ")");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

int print_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n";
        std::cout << "claim," << csv_escape(rep.claim) << "\n";
        std::cout << "universe," << csv_escape(rep.universe) << "\n";
        std::cout << "pass," << (rep.pass ? "true" : "false") << "\n";
        std::cout << "exhaustive," << (rep.exhaustive ? "true" : "false") << "\n";
        std::cout << "checked," << rep.checked << "\n";
        for (const RankedEntry& e : rep.tiers)
            std::cout << "tier" << e.rank << "," << csv_escape(e.count.str() + " " + e.code.g6)
                      << "\n";
        for (const std::string& w : rep.witnesses) std::cout << "witness," << csv_escape(w) << "\n";
        for (const std::string& n : rep.notes) std::cout << "note," << csv_escape(n) << "\n";
    } else {
        std::cout << rep.to_plain();
    }
    return rep.pass ? exit_ok : exit_verify_fail;
}

int run_count(const InputSource& src, bool factors, const std::string& format) {
    std::vector<Graph> graphs = src.load();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (format == "csv") std::cout << "g6,n,d\n";
    for (const Graph& g : graphs) {
        MemoTable memo;
        Count d = count_recursive(g, memo);
        std::vector<Count> parts;
        if (factors)
            for (const Graph& comp : g.components()) parts.push_back(count_recursive(comp, memo));
        if (format == "json") {
            nlohmann::ordered_json j;
            j["g6"] = emit_graph6(g);
            j["n"] = g.order();
            j["d"] = d.str();
            if (factors) {
                nlohmann::ordered_json fs = nlohmann::ordered_json::array();
                for (const Count& c : parts) fs.push_back(c.str());
                j["factors"] = std::move(fs);
            }
            arr.push_back(std::move(j));
        } else if (format == "csv") {
            std::cout << csv_escape(emit_graph6(g)) << "," << g.order() << "," << d << "\n";
        } else {
            std::cout << d;
            if (factors && parts.size() > 1) {
                std::cout << " =";
                for (std::size_t i = 0; i < parts.size(); ++i)
                    std::cout << (i == 0 ? " " : " * ") << parts[i];
            }
            std::cout << "\n";
        }
    }
    if (format == "json") std::cout << arr.dump() << "\n";
    return exit_ok;
}

int run_poly(const InputSource& src, const std::string& format) {
    std::vector<Graph> graphs = src.load();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (format == "csv") std::cout << "k,count\n";
    for (const Graph& g : graphs) {
        DissocPolynomial poly = dissociation_polynomial(g);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["g6"] = emit_graph6(g);
            nlohmann::ordered_json cs = nlohmann::ordered_json::array();
            for (const Count& c : poly.coeffs) cs.push_back(c.str());
            j["coeffs"] = std::move(cs);
            j["sum"] = poly.sum().str();
            arr.push_back(std::move(j));
        } else if (format == "csv") {
            for (std::size_t k = 0; k < poly.coeffs.size(); ++k)
                std::cout << k << "," << poly.coeffs[k] << "\n";
        } else {
            for (std::size_t k = 0; k < poly.coeffs.size(); ++k)
                std::cout << (k == 0 ? "" : " ") << poly.coeffs[k];
            std::cout << " (sum " << poly.sum() << ")\n";
        }
    }
    if (format == "json") std::cout << arr.dump() << "\n";
    return exit_ok;
}

int run_gen(const std::string& kind, int n) {
    std::vector<Graph> graphs =
        (kind == "trees") ? generate_trees(n) : generate_unicyclic(n);
    for (const Graph& g : graphs) std::cout << emit_graph6(g) << "\n";
    std::cerr << graphs.size() << " graphs\n";
    return exit_ok;
}

int run_rank(const InputSource& src, int trees_n, int unicyclic_n, int k,
             const std::string& format, int workers) {
    std::vector<Graph> universe;
    int named = (trees_n > 0 ? 1 : 0) + (unicyclic_n > 0 ? 1 : 0);
    if (named + src.sources() != 1)
        throw CLI::ValidationError("rank",
                                   "choose exactly one universe: --trees, --unicyclic, --stdin, "
                                   "--file or --g6");
    if (trees_n > 0) universe = generate_trees(trees_n);
    else if (unicyclic_n > 0) universe = generate_unicyclic(unicyclic_n);
    else universe = src.load();

    std::vector<RankedEntry> entries = rank_graphs(universe, k, workers);
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const RankedEntry& e : entries) {
            nlohmann::ordered_json j;
            j["rank"] = e.rank;
            j["d"] = e.count.str();
            j["g6"] = e.code.g6;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "rank,d,g6\n";
        for (const RankedEntry& e : entries)
            std::cout << e.rank << "," << e.count << "," << csv_escape(e.code.g6) << "\n";
    } else {
        for (const RankedEntry& e : entries)
            std::cout << e.rank << " " << e.count << " " << e.code.g6 << "\n";
    }
    return exit_ok;
}

int run_verify(const std::string& claim, const InputSource& src, int n, int max_n, int samples,
               std::uint64_t seed, bool exhaustive, const std::string& format, int workers) {
    VerificationReport rep;
    if (claim == "lemma2.1") {
        rep = check_upper_bound_sweep(max_n > 0 ? max_n : 6);
    } else if (claim == "lemma2.2") {
        rep = check_recurrence_sweep(max_n > 0 ? max_n : 6);
    } else if (claim == "lemma2.3") {
        rep = check_edge_deletion_sweep(max_n > 0 ? max_n : 7);
    } else if (claim == "lemma2.6") {
        rep = check_pendant_rewiring_random(samples > 0 ? samples : 500, max_n > 0 ? max_n : 12,
                                            seed);
    } else if (claim == "cor2.7") {
        if (n > 0) rep = check_quasi_pendant_range(n, n, workers);
        else rep = check_quasi_pendant_range(9, 12, workers);
    } else if (claim == "thm2.4" || claim == "thm3.1") {
        if (n <= 0) throw CLI::ValidationError("verify", claim + " needs --n");
        rep = verify_tree_theorems(n, workers);
    } else if (claim == "thm2.5") {
        if (n <= 0) throw CLI::ValidationError("verify", "thm2.5 needs --n");
        rep = verify_unicyclic_theorem(n, workers);
    } else if (claim == "main") {
        if (n <= 0) throw CLI::ValidationError("verify", "main needs --n");
        if (src.sources() > 0) {
            std::vector<Graph> universe = src.load();
            rep = verify_second_largest(n, universe, exhaustive, workers);
        } else {
            rep = check_cyclic_below_h_random(n, samples > 0 ? samples : 10000, seed, workers);
        }
    } else {
        throw CLI::ValidationError("verify", "unknown claim '" + claim + "'");
    }
    return print_report(rep, format);
}

int run_appendix(int n, const std::string& format, int workers) {
    AppendixTable table = reproduce_appendix(n, workers);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = table.n;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const AppendixRow& r : table.rows) {
            nlohmann::ordered_json row;
            row["g6"] = r.code.g6;
            row["d"] = r.d.str();
            row["tier"] = r.tier;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        j["report"] = nlohmann::ordered_json::parse(table.report.to_json());
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "g6,d,tier\n";
        for (const AppendixRow& r : table.rows)
            std::cout << csv_escape(r.code.g6) << "," << r.d << "," << r.tier << "\n";
    } else {
        for (const AppendixRow& r : table.rows)
            std::cout << r.code.g6 << " " << r.d << " " << r.tier << "\n";
        std::cout << table.report.to_plain();
    }
    return table.report.pass ? exit_ok : exit_verify_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dissociation-set counting and extremal verification for small graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // --format / --workers may follow the subcommand

    std::string format = "plain";
    int workers = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", workers,
                   "worker threads for scans (0 = DISSOC_WORKERS env or hardware)");

    // count
    auto* count_cmd = app.add_subcommand("count", "exact number of dissociation sets d(G)");
    InputSource count_src;
    add_input_flags(count_cmd, count_src);
    bool factors = false;
    count_cmd->add_flag("--factors", factors, "also print the per-component factors");

    // poly
    auto* poly_cmd =
        app.add_subcommand("poly", "dissociation polynomial d(G,0..n) with its sum");
    InputSource poly_src;
    add_input_flags(poly_cmd, poly_src);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate non-isomorphic trees or unicyclic graphs");
    std::string gen_kind;
    int gen_n = 0;
    std::string gen_emit = "g6";
    gen_cmd->add_option("kind", gen_kind, "trees or unicyclic")
        ->required()
        ->check(CLI::IsMember({"trees", "unicyclic"}));
    gen_cmd->add_option("n", gen_n, "order")->required();
    gen_cmd->add_option("--emit", gen_emit, "output encoding")->check(CLI::IsMember({"g6"}));

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank a universe of graphs by d(G)");
    InputSource rank_src;
    add_input_flags(rank_cmd, rank_src, false);
    int rank_trees = 0, rank_unicyclic = 0, rank_k = 2;
    rank_cmd->add_option("--trees", rank_trees, "universe: all trees of this order");
    rank_cmd->add_option("--unicyclic", rank_unicyclic,
                         "universe: all unicyclic graphs of this order");
    rank_cmd->add_option("-k,--depth", rank_k, "number of tiers to report")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "machine-check a lemma or theorem statement");
    std::string claim;
    InputSource verify_src;
    int verify_n = 0, verify_max_n = 0, verify_samples = 0;
    std::uint64_t verify_seed = 1;
    bool verify_exhaustive = false;
    verify_cmd
        ->add_option("claim", claim,
                     "lemma2.1 | lemma2.2 | lemma2.3 | lemma2.6 | cor2.7 | thm2.4 | thm2.5 | "
                     "thm3.1 | main")
        ->required();
    verify_cmd->add_option("--n", verify_n, "order for the order-specific claims");
    verify_cmd->add_option("--max-n", verify_max_n, "order cap for the exhaustive sweeps");
    verify_cmd->add_option("--samples", verify_samples, "sample count for randomized checks");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks")
        ->capture_default_str();
    verify_cmd->add_flag("--exhaustive", verify_exhaustive,
                         "assert the supplied stream covers the whole universe");
    add_input_flags(verify_cmd, verify_src, false);

    // appendix
    auto* appendix_cmd =
        app.add_subcommand("appendix", "full d-value table over all trees of order 9 or 10");
    int appendix_n = 0;
    appendix_cmd->add_option("n", appendix_n, "9 or 10")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_src, factors, format);
        if (poly_cmd->parsed()) return run_poly(poly_src, format);
        if (gen_cmd->parsed()) return run_gen(gen_kind, gen_n);
        if (rank_cmd->parsed())
            return run_rank(rank_src, rank_trees, rank_unicyclic, rank_k, format, workers);
        if (verify_cmd->parsed())
            return run_verify(claim, verify_src, verify_n, verify_max_n, verify_samples,
                              verify_seed, verify_exhaustive, format, workers);
        if (appendix_cmd->parsed()) return run_appendix(appendix_n, format, workers);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
