#include "dissoc/dissoc_count.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dissoc {

namespace detail {

void check_brute_bound(const Graph& g, const char* op) {
    if (g.order() > brute_force_cap)
        throw std::domain_error(std::string(op) + ": order " + std::to_string(g.order()) +
                                " exceeds the subset-enumeration bound of " +
                                std::to_string(brute_force_cap) + " vertices");
}

std::vector<std::uint32_t> adjacency_rows32(const Graph& g) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).word0());
    return rows;
}

} // namespace detail

bool is_dissociation_set(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("is_dissociation_set: set contains labels >= order");
    bool ok = true;
    s.for_each([&](int v) {
        if ((g.neighbors(v) & s).count() > 1) ok = false;
    });
    return ok;
}

Count count_brute(const Graph& g) {
    detail::check_brute_bound(g, "count_brute");
    const auto rows = detail::adjacency_rows32(g);
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (detail::mask_is_dissociation(rows, static_cast<std::uint32_t>(mask))) ++total;
    return Count{total};
}

namespace {

int max_degree_pivot(const Graph& comp) {
    int pivot = 0, best_deg = -1;
    for (int v = 0; v < comp.order(); ++v) {
        int d = comp.degree(v);
        if (d > best_deg) {
            best_deg = d;
            pivot = v;
        }
    }
    return pivot;
}

Count count_connected(const Graph& comp, MemoTable& memo, const PivotRule* pivot_rule);

Count count_split(const Graph& g, MemoTable& memo, const PivotRule* pivot_rule) {
    Count result{1};
    for (const Graph& comp : g.components()) result *= count_connected(comp, memo, pivot_rule);
    return result;
}

Count count_connected(const Graph& comp, MemoTable& memo, const PivotRule* pivot_rule) {
    const int n = comp.order();
    if (n == 1) return Count{2};
    if (n == 2) return Count{4}; // connected on two vertices = K_2

    const bool memoable =
        comp.edge_count() <= comp.order() || n <= general_canonical_cap;
    CanonicalCode key;
    if (memoable) {
        key = canonical_code(comp);
        if (auto hit = memo.find(key)) return *hit;
    }

    int pivot = pivot_rule ? (*pivot_rule)(comp) : max_degree_pivot(comp);
    if (pivot < 0 || pivot >= n)
        throw std::invalid_argument("count_recursive: pivot rule returned vertex " +
                                    std::to_string(pivot) + " for order " + std::to_string(n));

    const VertexSet closed = comp.closed_neighborhood(pivot);
    Count total = count_split(comp.delete_vertices(VertexSet::single(pivot)), memo, pivot_rule);
    total += count_split(comp.delete_vertices(closed), memo, pivot_rule);
    comp.neighbors(pivot).for_each([&](int u) {
        total += count_split(comp.delete_vertices(comp.closed_neighborhood(u) | closed), memo,
                             pivot_rule);
    });

    if (memoable) memo.insert(key, total);
    return total;
}

} // namespace

Count count_recursive(const Graph& g, MemoTable& memo) {
    return count_split(g, memo, nullptr);
}

Count count_recursive(const Graph& g) {
    MemoTable memo;
    return count_split(g, memo, nullptr);
}

Count count_recursive(const Graph& g, MemoTable& memo, const PivotRule& pivot) {
    return count_split(g, memo, &pivot);
}

Count DissocPolynomial::sum() const {
    Count s;
    for (const Count& c : coeffs) s += c;
    return s;
}

DissocPolynomial dissociation_polynomial(const Graph& g) {
    detail::check_brute_bound(g, "dissociation_polynomial");
    DissocPolynomial poly;
    poly.coeffs.assign(static_cast<std::size_t>(g.order()) + 1, Count{});
    const auto rows = detail::adjacency_rows32(g);
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (detail::mask_is_dissociation(rows, static_cast<std::uint32_t>(mask)))
            poly.coeffs[static_cast<std::size_t>(std::popcount(mask))] += Count{1};
    return poly;
}

std::vector<VertexSet> enumerate_dissociation_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_dissociation_set(g, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

Count path_count(int n) {
    if (n < 0) throw std::invalid_argument("path_count: negative order");
    // d(P_0)=1, d(P_1)=2, d(P_2)=4, then the three-term recurrence.
    Count a{1}, b{2}, c{4};
    if (n == 0) return a;
    if (n == 1) return b;
    if (n == 2) return c;
    for (int i = 3; i <= n; ++i) {
        Count next = a + b + c;
        a = b;
        b = c;
        c = next;
    }
    return c;
}

} // namespace dissoc
