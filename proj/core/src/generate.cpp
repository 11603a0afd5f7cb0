#include "dissoc/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "dissoc/canonical.hpp"
#include "dissoc/graph6.hpp"

namespace dissoc {

namespace {

void check_range(int n, int lo, int hi, const char* op) {
    if (n < lo || n > hi)
        throw std::domain_error(std::string(op) + ": order must be in " + std::to_string(lo) +
                                ".." + std::to_string(hi) + ", got " + std::to_string(n));
}

Graph tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    // parent of i = most recent vertex one level up
    std::vector<int> last_at_level(static_cast<std::size_t>(n) + 2, -1);
    for (int i = 0; i < n; ++i) {
        int lvl = levels[static_cast<std::size_t>(i)];
        if (lvl > 1) edges.emplace_back(last_at_level[static_cast<std::size_t>(lvl - 1)], i);
        last_at_level[static_cast<std::size_t>(lvl)] = i;
    }
    return Graph(n, edges);
}

// Root 0 is a centroid iff every child subtree has at most n/2 vertices.
// Rooted trees failing this cannot be the centroid-rooted form of their
// free tree, so they are skipped before the (costlier) canonization.
bool root_is_centroid(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    // Subtree sizes from the level sequence: vertex j belongs to the
    // subtree of the nearest earlier vertex at level levels[j]-1.
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> last_at_level(static_cast<std::size_t>(n) + 2, -1);
    for (int i = 0; i < n; ++i) {
        int lvl = levels[static_cast<std::size_t>(i)];
        if (lvl > 1) parent[static_cast<std::size_t>(i)] = last_at_level[static_cast<std::size_t>(lvl - 1)];
        last_at_level[static_cast<std::size_t>(lvl)] = i;
    }
    for (int i = n - 1; i >= 1; --i)
        size[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])] +=
            size[static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i)
        if (parent[static_cast<std::size_t>(i)] == 0 && 2 * size[static_cast<std::size_t>(i)] > n)
            return false;
    return true;
}

std::vector<Graph> sort_by_code(std::vector<std::pair<std::string, Graph>> canon) {
    std::sort(canon.begin(), canon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (auto& [code, g] : canon) out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<Graph> generate_trees(int n) {
    check_range(n, 1, tree_generation_cap, "generate_trees");
    if (n == 1) return {Graph(1, {})};
    if (n == 2) return {Graph(2, {{0, 1}})};

    // Beyer-Hedetniemi successor over level sequences of rooted trees:
    // start from the path [1,2,...,n], end at the star [1,2,2,...,2].
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i + 1;

    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (;;) {
        if (root_is_centroid(levels)) {
            Graph cf = canonical_form(tree_from_levels(levels));
            std::string code = emit_graph6(cf);
            if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(cf));
        }
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[static_cast<std::size_t>(i)] == levels[static_cast<std::size_t>(p)] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i)
            levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
    }
    return sort_by_code(std::move(found));
}

std::vector<Graph> generate_unicyclic(int n) {
    check_range(n, 3, unicyclic_generation_cap, "generate_unicyclic");
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (const Graph& tree : generate_trees(n)) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (tree.adjacent(u, v)) continue;
                Graph cf = canonical_form(tree.add_edge(u, v));
                std::string code = emit_graph6(cf);
                if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(cf));
            }
    }
    return sort_by_code(std::move(found));
}

std::vector<Graph> generate_graphs(int n) {
    check_range(n, 0, graph_generation_cap, "generate_graphs");
    std::vector<Graph> current{Graph(0, {})};
    for (int k = 1; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> found;
        for (const Graph& g : current) {
            std::vector<std::pair<int, int>> base = g.edges();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = base;
                for (int i = 0; i < k - 1; ++i)
                    if (mask & (std::uint32_t{1} << i)) edges.emplace_back(i, k - 1);
                Graph cf = canonical_form(Graph(k, edges));
                std::string code = emit_graph6(cf);
                if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(cf));
            }
        }
        current = sort_by_code(std::move(found));
    }
    return current;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1 || n > Graph::max_vertices)
        throw std::invalid_argument("random_tree: order out of range");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& x : pruefer) x = pick(rng);

    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++deg[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    // repeatedly join the smallest remaining leaf to the next code entry
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (used[static_cast<std::size_t>(leaf)] || deg[static_cast<std::size_t>(leaf)] != 1)
                continue;
            edges.emplace_back(leaf, x);
            used[static_cast<std::size_t>(leaf)] = true;
            --deg[static_cast<std::size_t>(x)];
            break;
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != 1) continue;
        (a < 0 ? a : b) = v;
    }
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_connected_cyclic(int n, std::mt19937_64& rng) {
    if (n < 4) throw std::invalid_argument("random_connected_cyclic: order must be >= 4");
    Graph g = random_tree(n, rng);
    int max_extra = n * (n - 1) / 2 - (n - 1);
    if (max_extra < 2)
        throw std::invalid_argument("random_connected_cyclic: no room for two extra edges");
    std::uniform_int_distribution<int> extra_dist(2, std::min(5, max_extra));
    int extra = extra_dist(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (extra > 0) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.adjacent(u, v)) continue;
        g = g.add_edge(u, v);
        --extra;
    }
    return g;
}

} // namespace dissoc
