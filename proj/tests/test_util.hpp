#ifndef DISSOC_TEST_UTIL_HPP
#define DISSOC_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc::test {

/// The same graph under a uniformly random relabeling.
inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), edges);
}

/// Exhaustive permutation isomorphism test; independent of the
/// canonical-labeling machinery. Keep the order small.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// All 2^C(n,2) labeled graphs on n vertices.
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << slots.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

} // namespace dissoc::test

#endif
