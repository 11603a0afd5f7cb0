#ifndef DISSOC_FAMILIES_HPP
#define DISSOC_FAMILIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dissoc/count.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

/// K_r joined to a disjoint union of cliques: vertex 0 of the K_r block
/// gets one edge to the lowest label of each part. Part size 1 stands
/// for K_1, so K_r * (aK_1 u bK_2 u ...) is a single constructor.
/// Labels: K_r occupies 0..r-1, parts follow in the given order.
Graph star_product(int r, const std::vector<int>& parts);

/// Extremal connected graphs of each order (two of them at n = 6,
/// otherwise one). n >= 2.
std::vector<Graph> make_F(int n);

/// Extremal unicyclic graph of order n >= 3.
Graph make_U(int n);

/// Second-extremal tree of order n >= 9.
Graph make_T(int n);

/// Closed forms for the extremal counts: d(F_n) and d(U_n) = d(T_n).
Count f_closed(int n); // n >= 2
Count h_closed(int n); // n >= 3; 42 at n = 6

enum class StandardKind { path, cycle, complete, star, units };

/// path(n), cycle(n), complete(n): the named graph of that order
/// (cycle needs n >= 3). star(t) = K_{1,t} with center 0, order t+1.
/// units uses make_units below.
Graph make_standard(StandardKind kind, int n);

/// s isolated vertices followed by t disjoint edges.
Graph make_units(int s, int t);

/// Parse the CLI family grammar:
///   path:N | cycle:N | complete:N | star:T | units:s=S,t=T
///   | F:N | U:N | T:N | star-product:r=R,parts=P1,P2,...
/// Returns every member of the family (one graph except for F:6).
std::vector<Graph> parse_family_spec(std::string_view spec);

/// One-line summary of the grammar for help text.
std::string family_spec_grammar();

} // namespace dissoc

#endif
