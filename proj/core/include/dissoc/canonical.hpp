#ifndef DISSOC_CANONICAL_HPP
#define DISSOC_CANONICAL_HPP

#include <compare>
#include <string>

#include "dissoc/graph.hpp"

namespace dissoc {

/// Isomorphism-invariant key: the graph6 encoding of a canonical
/// representative. Equal codes <=> isomorphic graphs, within the
/// supported range.
struct CanonicalCode {
    std::string g6;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Order cap for the search-based canonization of components that are
/// neither forests nor unicyclic. Trees and unicyclic components are
/// canonized structurally at any supported order.
inline constexpr int general_canonical_cap = 12;

/// True when every component is a tree, unicyclic, or within the
/// general-search cap, i.e. canonical_code will not throw.
bool canonizable(const Graph& g);

/// Canonically relabeled representative of g's isomorphism class.
/// Components are canonized independently and concatenated in sorted
/// code order. Throws std::domain_error past the supported range.
Graph canonical_form(const Graph& g);

CanonicalCode canonical_code(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace dissoc

#endif
