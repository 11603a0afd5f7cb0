#include "dissoc/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dissoc/graph6.hpp"

namespace dissoc {

namespace {

// ---------------------------------------------------------------------
// Rooted-tree codes (AHU): code(v) = "(" + concat(sorted child codes) + ")".
// Children are laid out in ascending code order; equal codes mean
// isomorphic subtrees, so the resulting labeled graph does not depend on
// how ties are broken.
// ---------------------------------------------------------------------

// blocked: vertices the traversal must not enter (the cycle core for
// hanging trees, or empty for whole trees).
std::string rooted_code(const Graph& g, int v, int parent, const VertexSet& blocked) {
    std::vector<std::string> child_codes;
    g.neighbors(v).for_each([&](int u) {
        if (u == parent || blocked.test(u)) return;
        child_codes.push_back(rooted_code(g, u, v, blocked));
    });
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// Preorder layout of the subtree rooted at v: assigns the next labels and
// records tree edges, visiting children in ascending code order.
void layout_rooted(const Graph& g, int v, int parent, const VertexSet& blocked, int& next_label,
                   std::vector<int>& label_of, std::vector<std::pair<int, int>>& edges) {
    label_of[static_cast<std::size_t>(v)] = next_label++;
    std::vector<std::pair<std::string, int>> children;
    g.neighbors(v).for_each([&](int u) {
        if (u == parent || blocked.test(u)) return;
        children.emplace_back(rooted_code(g, u, v, blocked), u);
    });
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [code, u] : children) {
        edges.emplace_back(label_of[static_cast<std::size_t>(v)], next_label);
        layout_rooted(g, u, v, blocked, next_label, label_of, edges);
    }
}

std::vector<int> tree_centers(const Graph& g) {
    int n = g.order();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> layer;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = true;
            --remaining;
            g.neighbors(v).for_each([&](int u) {
                if (removed[static_cast<std::size_t>(u)]) return;
                if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
            });
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
    return centers;
}

Graph canonical_tree(const Graph& g) {
    int n = g.order();
    if (n <= 1) return g;
    std::vector<int> centers = tree_centers(g);
    VertexSet no_block;
    int root = centers[0];
    if (centers.size() == 2) {
        std::string c0 = rooted_code(g, centers[0], -1, no_block);
        std::string c1 = rooted_code(g, centers[1], -1, no_block);
        if (c1 < c0) root = centers[1];
    }
    std::vector<int> label_of(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> edges;
    int next_label = 0;
    layout_rooted(g, root, -1, no_block, next_label, label_of, edges);
    return Graph(n, edges);
}

// ---------------------------------------------------------------------
// Unicyclic canonization: locate the unique cycle, take the AHU code of
// each hanging tree, and pick the lexicographically smallest sequence of
// codes over all rotations and both directions.
// ---------------------------------------------------------------------

std::vector<int> find_cycle(const Graph& g) {
    int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed[static_cast<std::size_t>(v)] = true;
        g.neighbors(v).for_each([&](int u) {
            if (removed[static_cast<std::size_t>(u)]) return;
            if (--deg[static_cast<std::size_t>(u)] == 1) queue.push_back(u);
        });
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            start = v;
            break;
        }
    // Walk the cycle.
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    for (;;) {
        int next = -1;
        g.neighbors(cur).for_each([&](int u) {
            if (removed[static_cast<std::size_t>(u)] || u == prev || next != -1) return;
            next = u;
        });
        if (next == start || next == -1) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
    }
    return cycle;
}

Graph canonical_unicyclic(const Graph& g) {
    std::vector<int> cycle = find_cycle(g);
    int len = static_cast<int>(cycle.size());
    VertexSet core;
    for (int v : cycle) core.set(v);

    std::vector<std::string> codes(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k)
        codes[static_cast<std::size_t>(k)] = rooted_code(g, cycle[static_cast<std::size_t>(k)], -1, core);

    std::vector<int> best;
    std::vector<std::string> best_codes;
    for (int s = 0; s < len; ++s) {
        for (int dir : {1, -1}) {
            std::vector<int> order(static_cast<std::size_t>(len));
            std::vector<std::string> seq(static_cast<std::size_t>(len));
            for (int k = 0; k < len; ++k) {
                int idx = ((s + dir * k) % len + len) % len;
                order[static_cast<std::size_t>(k)] = cycle[static_cast<std::size_t>(idx)];
                seq[static_cast<std::size_t>(k)] = codes[static_cast<std::size_t>(idx)];
            }
            if (best.empty() || seq < best_codes) {
                best = std::move(order);
                best_codes = std::move(seq);
            }
        }
    }

    int n = g.order();
    std::vector<int> label_of(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> block_roots(static_cast<std::size_t>(len));
    int next_label = 0;
    for (int k = 0; k < len; ++k) {
        block_roots[static_cast<std::size_t>(k)] = next_label;
        layout_rooted(g, best[static_cast<std::size_t>(k)], -1, core, next_label, label_of, edges);
    }
    for (int k = 0; k < len; ++k)
        edges.emplace_back(block_roots[static_cast<std::size_t>(k)],
                           block_roots[static_cast<std::size_t>((k + 1) % len)]);
    return Graph(n, edges);
}

// ---------------------------------------------------------------------
// General connected graphs up to general_canonical_cap vertices:
// individualization-refinement search minimizing the adjacency bit
// string (in graph6 column order, so the code is the g6-minimal
// representative over the explored labelings).
// ---------------------------------------------------------------------

using Key = unsigned __int128;
using Partition = std::vector<std::vector<int>>;

// Equitable refinement; cell order evolves only through splits keyed by
// invariant neighbor counts, so the ordered result is the same for
// isomorphic inputs.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < p.size() && !changed; ++si) {
            VertexSet splitter;
            for (int v : p[si]) splitter.set(v);
            for (std::size_t di = 0; di < p.size() && !changed; ++di) {
                if (p[di].size() <= 1) continue;
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(p[di].size());
                for (int v : p[di]) keyed.emplace_back((g.neighbors(v) & splitter).count(), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) continue;
                Partition replacement;
                std::vector<int> cell{keyed[0].second};
                for (std::size_t i = 1; i < keyed.size(); ++i) {
                    if (keyed[i].first != keyed[i - 1].first) {
                        replacement.push_back(std::move(cell));
                        cell.clear();
                    }
                    cell.push_back(keyed[i].second);
                }
                replacement.push_back(std::move(cell));
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(di));
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(di),
                         std::make_move_iterator(replacement.begin()),
                         std::make_move_iterator(replacement.end()));
                changed = true;
            }
        }
    }
}

Key labeling_key(const Graph& g, const std::vector<int>& perm) {
    Key key = 0;
    int n = g.order();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            key = (key << 1) |
                  (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0);
    return key;
}

// All vertices of the cell pairwise twins: any transposition inside the
// cell is an automorphism, so one branch represents them all.
bool interchangeable_cell(const Graph& g, const std::vector<int>& cell) {
    for (std::size_t a = 0; a < cell.size(); ++a)
        for (std::size_t b = a + 1; b < cell.size(); ++b) {
            VertexSet nu = g.neighbors(cell[a]);
            VertexSet nv = g.neighbors(cell[b]);
            nu.reset(cell[b]);
            nv.reset(cell[a]);
            if (!(nu == nv)) return false;
        }
    return true;
}

void search(const Graph& g, Partition p, Key& best_key, std::vector<int>& best_perm, bool& have_best) {
    refine(g, p);
    bool discrete = true;
    std::size_t target = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].size() > 1) {
            discrete = false;
            target = i;
            break;
        }
    if (discrete) {
        std::vector<int> perm;
        perm.reserve(static_cast<std::size_t>(g.order()));
        for (const auto& cell : p) perm.push_back(cell[0]);
        Key key = labeling_key(g, perm);
        if (!have_best || key < best_key) {
            best_key = key;
            best_perm = std::move(perm);
            have_best = true;
        }
        return;
    }
    std::vector<int> branch_vertices = p[target];
    if (interchangeable_cell(g, branch_vertices)) branch_vertices.resize(1);
    for (int v : branch_vertices) {
        Partition child = p;
        std::vector<int> rest;
        for (int u : p[target])
            if (u != v) rest.push_back(u);
        child[target] = {v};
        child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
        search(g, std::move(child), best_key, best_perm, have_best);
    }
}

Graph canonical_general(const Graph& g) {
    int n = g.order();
    if (n > general_canonical_cap)
        throw std::domain_error("canonical_code: component of order " + std::to_string(n) +
                                " is neither a tree nor unicyclic; the general search is capped at " +
                                std::to_string(general_canonical_cap) + " vertices");
    // Start from the degree partition, cells in ascending degree order.
    std::vector<std::pair<int, int>> by_degree;
    for (int v = 0; v < n; ++v) by_degree.emplace_back(g.degree(v), v);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Partition p;
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
        if (i == 0 || by_degree[i].first != by_degree[i - 1].first) p.emplace_back();
        p.back().push_back(by_degree[i].second);
    }

    Key best_key = 0;
    std::vector<int> best_perm;
    bool have_best = false;
    search(g, std::move(p), best_key, best_perm, have_best);

    std::vector<int> new_label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) new_label[static_cast<std::size_t>(best_perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
    return Graph(n, edges);
}

Graph canonical_connected(const Graph& g) {
    if (g.order() <= 2 || g.is_tree()) return canonical_tree(g);
    if (g.is_unicyclic()) return canonical_unicyclic(g);
    return canonical_general(g);
}

bool canonizable_connected(const Graph& g) {
    return g.order() <= general_canonical_cap || g.is_tree() || g.is_unicyclic();
}

} // namespace

bool canonizable(const Graph& g) {
    for (const Graph& c : g.components())
        if (!canonizable_connected(c)) return false;
    return true;
}

Graph canonical_form(const Graph& g) {
    std::vector<Graph> comps = g.components();
    if (comps.size() == 1) return canonical_connected(comps[0]);

    std::vector<std::pair<std::string, Graph>> canon;
    canon.reserve(comps.size());
    for (const Graph& c : comps) {
        Graph cc = canonical_connected(c);
        canon.emplace_back(emit_graph6(cc), std::move(cc));
    }
    std::sort(canon.begin(), canon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const auto& [code, c] : canon) {
        for (auto [u, v] : c.edges()) edges.emplace_back(u + offset, v + offset);
        offset += c.order();
    }
    return Graph(g.order(), edges);
}

CanonicalCode canonical_code(const Graph& g) {
    return CanonicalCode{emit_graph6(canonical_form(g))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace dissoc
