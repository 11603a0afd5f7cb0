#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dissoc/canonical.hpp"
#include "dissoc/families.hpp"
#include "dissoc/generate.hpp"
#include "dissoc/graph6.hpp"
#include "test_util.hpp"

using namespace dissoc;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

} // namespace

TEST_CASE("codes are invariant under relabeling") {
    std::vector<Graph> pool = {
        make_standard(StandardKind::path, 3),
        make_standard(StandardKind::path, 9),
        make_standard(StandardKind::star, 5),
        make_standard(StandardKind::cycle, 8),
        make_standard(StandardKind::complete, 7),
        make_units(3, 2),
        star_product(1, {1, 1, 2, 2, 2}),
        star_product(3, {2, 2, 2}),
        make_T(14),   // 14-vertex tree: structural path
        make_U(13),   // 13-vertex unicyclic: structural path
        petersen(),   // vertex-transitive, exercises the search path
    };
    std::mt19937_64 rng(5);
    for (const Graph& g : pool) {
        CanonicalCode code = canonical_code(g);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(canonical_code(test::random_relabel(g, rng)) == code);
        // the canonical representative encodes to its own code
        CHECK(emit_graph6(canonical_form(g)) == code.g6);
        CHECK(canonical_code(canonical_form(g)) == code);
    }
}

TEST_CASE("basic code separations") {
    Graph p3 = make_standard(StandardKind::path, 3);
    Graph k3 = make_standard(StandardKind::complete, 3);
    Graph relabeled(3, {{2, 1}, {1, 0}});
    CHECK(canonical_code(p3) == canonical_code(relabeled));
    CHECK(canonical_code(p3) != canonical_code(k3));
    CHECK(canonical_code(make_standard(StandardKind::star, 3)) !=
          canonical_code(make_standard(StandardKind::path, 4)));
}

TEST_CASE("code equality agrees with brute-force isomorphism on all labeled 5-vertex graphs") {
    std::map<std::string, std::vector<Graph>> classes;
    for (const Graph& g : test::all_labeled_graphs(5))
        classes[canonical_code(g).g6].push_back(g);
    CHECK(classes.size() == 34);

    // inside a class: everything isomorphic to the representative
    std::vector<Graph> reps;
    for (const auto& [code, members] : classes) {
        reps.push_back(members.front());
        for (std::size_t i = 1; i < members.size(); i += 7)
            CHECK(test::brute_isomorphic(members.front(), members[i]));
    }
    // across classes: representatives pairwise non-isomorphic
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(test::brute_isomorphic(reps[i], reps[j]));
}

TEST_CASE("are_isomorphic") {
    Graph p4 = make_standard(StandardKind::path, 4);
    Graph p4_reversed(4, {{3, 2}, {2, 1}, {1, 0}});
    CHECK(are_isomorphic(p4, p4_reversed));
    CHECK_FALSE(are_isomorphic(make_standard(StandardKind::star, 3), p4));
    CHECK(are_isomorphic(make_U(6), star_product(1, {3, 2})));
    CHECK(are_isomorphic(Graph(0, {}), Graph(0, {})));
}

TEST_CASE("the T_9 double phrasing, checked against exhaustive permutation search") {
    Graph a = star_product(1, {1, 1, 2, 2, 2});
    Graph b = star_product(2, {2, 2, 2, 1});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(test::brute_isomorphic(a, b));
}

TEST_CASE("unicyclic structural canonization agrees with the general search") {
    // Same isomorphism classes must collide, different ones must not,
    // even though unicyclic graphs never take the search path directly.
    std::mt19937_64 rng(13);
    std::vector<Graph> all = generate_unicyclic(7);
    CHECK(all.size() == 33);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (int trial = 0; trial < 10; ++trial)
            CHECK(canonical_code(test::random_relabel(all[i], rng)) == canonical_code(all[i]));
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(test::brute_isomorphic(all[i], all[j]));
    }
}

TEST_CASE("disconnected graphs canonize componentwise") {
    std::mt19937_64 rng(19);
    Graph mixed = make_units(2, 2); // 2K_1 u 2K_2
    CanonicalCode code = canonical_code(mixed);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(canonical_code(test::random_relabel(mixed, rng)) == code);

    // forest with unequal trees u a cycle, beyond the search cap
    std::vector<std::pair<int, int>> edges;
    Graph t = make_T(9);
    for (auto [u, v] : t.edges()) edges.emplace_back(u, v);
    Graph c5 = make_standard(StandardKind::cycle, 5);
    for (auto [u, v] : c5.edges()) edges.emplace_back(u + 9, v + 9);
    Graph big(14, edges);
    CanonicalCode big_code = canonical_code(big);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(canonical_code(test::random_relabel(big, rng)) == big_code);
}

TEST_CASE("range limits") {
    CHECK(canonizable(make_standard(StandardKind::complete, 12)));
    CHECK(canonizable(make_T(15)));
    CHECK(canonizable(make_U(14)));
    CHECK_FALSE(canonizable(make_standard(StandardKind::complete, 13)));
    CHECK_THROWS_AS(canonical_code(make_standard(StandardKind::complete, 13)), std::domain_error);
    // trees and unicyclic graphs above the cap are fine
    CHECK(canonical_code(make_standard(StandardKind::path, 30)).g6.size() > 0);
    CHECK(canonical_code(make_standard(StandardKind::cycle, 30)).g6.size() > 0);
}

TEST_CASE("highly symmetric graphs within the cap") {
    std::mt19937_64 rng(23);
    for (const Graph& g : {make_standard(StandardKind::complete, 12),
                           make_standard(StandardKind::cycle, 12), make_units(0, 6),
                           make_units(12, 0)}) {
        CanonicalCode code = canonical_code(g);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(canonical_code(test::random_relabel(g, rng)) == code);
    }
}
