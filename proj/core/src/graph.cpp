#include "dissoc/graph.hpp"

#include <stdexcept>
#include <string>

namespace dissoc {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("Graph: order must be in 0.." + std::to_string(max_vertices) +
                                    ", got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for order " +
                                        std::to_string(n));
        if (!adj_[static_cast<std::size_t>(u)].test(v)) {
            adj_[static_cast<std::size_t>(u)].set(v);
            adj_[static_cast<std::size_t>(v)].set(u);
            ++m_;
        }
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
}

Graph Graph::delete_vertices(const VertexSet& s) const {
    if (!s.is_subset_of(vertex_set()))
        throw std::invalid_argument("Graph::delete_vertices: set contains labels >= order");
    VertexSet keep = vertex_set().minus(s);
    int new_labels[max_vertices];
    int next = 0;
    keep.for_each([&](int v) { new_labels[v] = next++; });

    Graph g;
    g.n_ = next;
    g.adj_.assign(static_cast<std::size_t>(next), VertexSet{});
    keep.for_each([&](int v) {
        (neighbors(v) & keep).for_each([&](int u) {
            g.adj_[static_cast<std::size_t>(new_labels[v])].set(new_labels[u]);
        });
    });
    for (const auto& row : g.adj_) g.m_ += row.count();
    g.m_ /= 2;
    return g;
}

Graph Graph::delete_edge(int u, int v) const {
    if (!adjacent(u, v))
        throw std::invalid_argument("Graph::delete_edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)].reset(v);
    g.adj_[static_cast<std::size_t>(v)].reset(u);
    --g.m_;
    return g;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph::add_edge: loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw std::invalid_argument("Graph::add_edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") already present");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)].set(v);
    g.adj_[static_cast<std::size_t>(v)].set(u);
    ++g.m_;
    return g;
}

std::vector<VertexSet> Graph::component_sets() const {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int start = 0; start < n_; ++start) {
        if (seen.test(start)) continue;
        VertexSet comp;
        VertexSet frontier = VertexSet::single(start);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
            frontier = next.minus(comp);
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<Graph> Graph::components() const {
    std::vector<Graph> out;
    for (const VertexSet& comp : component_sets())
        out.push_back(delete_vertices(vertex_set().minus(comp)));
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    return component_sets().size() == 1;
}

bool Graph::is_forest() const {
    // A graph is a forest iff every component has order-1 edges, i.e.
    // the cycle space is trivial.
    return cycle_space_dim() == 0;
}

bool Graph::are_true_twins(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph::are_true_twins: u == v");
    return adjacent(u, v) && closed_neighborhood(u) == closed_neighborhood(v);
}

bool Graph::are_false_twins(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph::are_false_twins: u == v");
    return neighbors(u) == neighbors(v);
}

int Graph::cycle_space_dim() const {
    return m_ - n_ + static_cast<int>(component_sets().size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

} // namespace dissoc
