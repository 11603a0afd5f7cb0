#ifndef DISSOC_DISSOC_COUNT_HPP
#define DISSOC_DISSOC_COUNT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dissoc/canonical.hpp"
#include "dissoc/count.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

/// Practical cap for the subset-enumeration routines.
inline constexpr int brute_force_cap = 26;

/// True iff every vertex of s has at most one neighbor inside s.
bool is_dissociation_set(const Graph& g, const VertexSet& s);

/// d(G) by scanning all 2^n subsets. Independent of every other counter;
/// this is the oracle the recursive counter is validated against.
/// Refuses graphs above brute_force_cap vertices.
Count count_brute(const Graph& g);

/// Memo for the recursive counter, keyed by canonical code of connected
/// components. An entry's value is d of any graph with that code, so
/// duplicate inserts are idempotent; use one table per worker thread.
class MemoTable {
public:
    std::optional<Count> find(const CanonicalCode& key) const {
        auto it = map_.find(key.g6);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const CanonicalCode& key, const Count& value) { map_.emplace(key.g6, value); }

    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<std::string, Count> map_;
};

/// Pivot selector for the recurrence; called on connected graphs of
/// order >= 3. Any vertex is a correct pivot.
using PivotRule = std::function<int(const Graph&)>;

/// d(G) by the vertex-deletion recurrence
///   d(G) = d(G-v) + d(G-N[v]) + sum over u in N(v) of d(G-(N[u] u N[v]))
/// applied per connected component with the component product. The
/// default pivot is a maximum-degree vertex (smallest label on ties);
/// components that are trees, unicyclic, or small enough to canonize
/// are memoized.
Count count_recursive(const Graph& g, MemoTable& memo);
Count count_recursive(const Graph& g);
Count count_recursive(const Graph& g, MemoTable& memo, const PivotRule& pivot);

/// Coefficient vector: coeffs[k] = d(G,k), the number of dissociation
/// sets of k vertices; coeffs[0] = 1 and the coefficients sum to d(G).
struct DissocPolynomial {
    std::vector<Count> coeffs;
    Count sum() const;
};

/// Enumeration-based, capped like count_brute.
DissocPolynomial dissociation_polynomial(const Graph& g);

/// Visit every dissociation set exactly once in ascending-bitmask order.
template <typename F>
void for_each_dissociation_set(const Graph& g, F&& f);

std::vector<VertexSet> enumerate_dissociation_sets(const Graph& g);

/// d(P_n) via d(P_n) = d(P_{n-1}) + d(P_{n-2}) + d(P_{n-3}) with
/// d(P_0) = 1, d(P_1) = 2, d(P_2) = 4.
Count path_count(int n);

// -----------------------------------------------------------------------

namespace detail {
void check_brute_bound(const Graph& g, const char* op);
std::vector<std::uint32_t> adjacency_rows32(const Graph& g);

inline bool mask_is_dissociation(const std::vector<std::uint32_t>& rows, std::uint32_t mask) {
    std::uint32_t rest = mask;
    while (rest != 0) {
        int v = std::countr_zero(rest);
        if (std::popcount(rows[static_cast<std::size_t>(v)] & mask) > 1) return false;
        rest &= rest - 1;
    }
    return true;
}

inline VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet s;
    while (mask != 0) {
        int v = std::countr_zero(mask);
        s.set(v);
        mask &= mask - 1;
    }
    return s;
}
} // namespace detail

template <typename F>
void for_each_dissociation_set(const Graph& g, F&& f) {
    detail::check_brute_bound(g, "for_each_dissociation_set");
    const auto rows = detail::adjacency_rows32(g);
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (detail::mask_is_dissociation(rows, static_cast<std::uint32_t>(mask)))
            f(detail::mask_to_set(static_cast<std::uint32_t>(mask)));
}

} // namespace dissoc

#endif
