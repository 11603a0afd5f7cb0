#ifndef DISSOC_GRAPH_HPP
#define DISSOC_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "dissoc/vertex_set.hpp"

namespace dissoc {

/// Immutable simple undirected graph on at most 126 vertices, stored as
/// per-vertex adjacency bitsets. Every mutation-style operation returns a
/// new Graph, so values can be shared freely between threads.
class Graph {
public:
    static constexpr int max_vertices = 126;

    Graph() = default;

    /// Build a graph with the given order and edge list. Duplicate pairs
    /// collapse; loops and out-of-range endpoints are rejected.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    /// N[v] = {v} union N(v).
    VertexSet closed_neighborhood(int v) const;

    VertexSet vertex_set() const { return VertexSet::all(n_); }

    /// Induced subgraph on V \ s, survivors relabeled to 0..n-|s|-1 in
    /// ascending original order.
    Graph delete_vertices(const VertexSet& s) const;

    /// Same vertex set with edge uv removed; uv must exist.
    Graph delete_edge(int u, int v) const;

    /// Same vertex set with edge uv added; uv must be a non-edge.
    Graph add_edge(int u, int v) const;

    /// Connected components as independent graphs, relabeled like
    /// delete_vertices, ordered by smallest original vertex label.
    std::vector<Graph> components() const;

    /// Vertex sets of the components, same order as components().
    std::vector<VertexSet> component_sets() const;

    bool is_connected() const;
    bool is_forest() const;
    /// Connected with exactly n-1 edges.
    bool is_tree() const { return is_connected() && m_ == n_ - 1; }
    /// Connected with exactly n edges, i.e. cycle space dimension 1.
    bool is_unicyclic() const { return n_ >= 3 && m_ == n_ && is_connected(); }

    /// True twins: uv is an edge and N[u] = N[v].
    bool are_true_twins(int u, int v) const;
    /// False twins: N(u) = N(v) (which forces uv to be a non-edge).
    bool are_false_twins(int u, int v) const;

    /// |E| - |V| + #components; equals |E| - |V| + 1 on connected graphs.
    int cycle_space_dim() const;

    /// All edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace dissoc

#endif
