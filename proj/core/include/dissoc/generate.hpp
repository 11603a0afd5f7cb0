#ifndef DISSOC_GENERATE_HPP
#define DISSOC_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

inline constexpr int tree_generation_cap = 18;
inline constexpr int unicyclic_generation_cap = 14;
inline constexpr int graph_generation_cap = 8;

/// All non-isomorphic free trees on n vertices (1 <= n <= 18), as
/// canonically labeled graphs sorted by canonical code.
std::vector<Graph> generate_trees(int n);

/// All non-isomorphic connected unicyclic graphs on n vertices
/// (3 <= n <= 14): every tree plus each non-edge, deduplicated by
/// canonical code, sorted by canonical code.
std::vector<Graph> generate_unicyclic(int n);

/// All non-isomorphic simple graphs on n vertices (0 <= n <= 8), built
/// by vertex augmentation; the exhaustive fixture for the small-order
/// lemma sweeps.
std::vector<Graph> generate_graphs(int n);

/// Single-consumer iteration over a generated family.
class TreeStream {
public:
    explicit TreeStream(int n) : graphs_(generate_trees(n)) {}
    std::optional<Graph> next() {
        if (pos_ == graphs_.size()) return std::nullopt;
        return graphs_[pos_++];
    }
    const std::vector<Graph>& all() const { return graphs_; }

private:
    std::vector<Graph> graphs_;
    std::size_t pos_ = 0;
};

class UnicyclicStream {
public:
    explicit UnicyclicStream(int n) : graphs_(generate_unicyclic(n)) {}
    std::optional<Graph> next() {
        if (pos_ == graphs_.size()) return std::nullopt;
        return graphs_[pos_++];
    }
    const std::vector<Graph>& all() const { return graphs_; }

private:
    std::vector<Graph> graphs_;
    std::size_t pos_ = 0;
};

/// Uniform labeled tree by Pruefer decoding; n >= 1.
Graph random_tree(int n, std::mt19937_64& rng);

/// Random connected graph with cycle space dimension >= 2: a random
/// spanning tree plus 2..5 extra edges (capped by the available
/// non-edges).
Graph random_connected_cyclic(int n, std::mt19937_64& rng);

} // namespace dissoc

#endif
