#ifndef DISSOC_VERIFY_HPP
#define DISSOC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dissoc/canonical.hpp"
#include "dissoc/count.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

/// One tier entry of a ranking: rank is the 1-based position among
/// distinct count values (ties share a rank).
struct RankedEntry {
    CanonicalCode code;
    Count count;
    int rank = 0;
};

/// Pass/fail record for one claim over one universe of graphs. A fail
/// verdict always carries at least one witness (canonical codes of the
/// offending graphs). exhaustive=false downgrades a pass to "no
/// counterexample found" (partial universe).
struct VerificationReport {
    std::string claim;
    std::string universe;
    bool pass = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
    std::vector<RankedEntry> tiers;

    void fail(const std::string& witness_code, const std::string& note);
    std::string verdict() const;

    /// Stable-field-order key/value serialization.
    std::string to_json() const;
    /// Human-readable table.
    std::string to_plain() const;
};

// ---- single-instance lemma checks (enumeration-oracle based) ----------

/// d(g) <= 2^n with equality iff every component is K_1 or K_2.
VerificationReport check_upper_bound(const Graph& g);

/// The vertex-deletion identity at pivot v, both sides by count_brute.
VerificationReport check_recurrence(const Graph& g, int v);

/// d(g) <= d(g - uv) with equality iff u, v are true twins.
VerificationReport check_edge_deletion(const Graph& g, int u, int v);

/// Strict growth under pendant rewiring: with pendant vertices
/// vs_minus1, vs both adjacent to the quasi-pendant uq,
/// d(g) < d(g + {vs_minus1, vs} - {uq, vs}).
VerificationReport check_pendant_rewiring(const Graph& g, int uq, int vs_minus1, int vs);

/// If the tree t ranks second among all trees of its order, every
/// quasi-pendant vertex of t has at most 3 pendant neighbors.
VerificationReport check_quasi_pendant_bound(const Graph& t);

// ---- exhaustive / randomized sweeps ------------------------------------

VerificationReport check_upper_bound_sweep(int max_n);
VerificationReport check_recurrence_sweep(int max_n);
VerificationReport check_edge_deletion_sweep(int max_n);
VerificationReport check_pendant_rewiring_random(int samples, int max_n, std::uint64_t seed);
VerificationReport check_quasi_pendant_range(int lo, int hi, int workers = 0);

/// Random connected graphs with cycle space dimension >= 2 all count
/// strictly below h(n).
VerificationReport check_cyclic_below_h_random(int n, int samples, std::uint64_t seed,
                                               int workers = 0);

// ---- rankings and theorem statements -----------------------------------

/// Top-k tiers over a universe of graphs. Entries are sorted by count
/// descending, canonical code ascending; duplicate codes collapse, so
/// the result is independent of input order.
std::vector<RankedEntry> rank_graphs(const std::vector<Graph>& universe, int k, int workers = 0);

/// Max over all trees of order n is f(n) attained exactly by the F_n
/// members; for n >= 9 the second tier is h(n) attained exactly by T_n.
VerificationReport verify_tree_theorems(int n, int workers = 0);

/// Max over all unicyclic graphs of order n is h(n), sole attainer U_n.
VerificationReport verify_unicyclic_theorem(int n, int workers = 0);

/// Over a universe of connected order-n graphs: tier 1 = {F_n} at f(n),
/// tier 2 = {U_n, T_n} at h(n), and everything with cycle space
/// dimension >= 2 counts strictly below h(n). With exhaustive=false the
/// tier-completeness assertions relax to "no counterexample found".
VerificationReport verify_second_largest(int n, const std::vector<Graph>& universe,
                                         bool exhaustive, int workers = 0);

// ---- appendix reproduction ----------------------------------------------

struct AppendixRow {
    CanonicalCode code;
    Count d;
    int tier = 0;
};

struct AppendixTable {
    int n = 0;
    std::vector<AppendixRow> rows; // sorted by d descending, code ascending
    VerificationReport report;
};

/// Full d-value table over all trees of order 9 or 10, checked against
/// the published class counts, the extremal tiers and the quoted value
/// multiset.
AppendixTable reproduce_appendix(int n, int workers = 0);

} // namespace dissoc

#endif
