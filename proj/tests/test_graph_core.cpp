#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dissoc/families.hpp"
#include "dissoc/graph.hpp"
#include "dissoc/graph6.hpp"
#include "test_util.hpp"

using namespace dissoc;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg;
    for (int v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
    return deg;
}

void check_well_formed(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = 0; v < g.order(); ++v)
            if (u != v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

} // namespace

TEST_CASE("graph construction") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(degree_sequence(p3) == std::vector<int>{1, 2, 1});

    Graph empty(0, {});
    CHECK(empty.order() == 0);
    CHECK(empty.edge_count() == 0);

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(degree_sequence(k3) == std::vector<int>{2, 2, 2});

    // duplicate pairs collapse, both orientations
    Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(127, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("delete_vertices relabels ascending") {
    Graph p3 = make_standard(StandardKind::path, 3);
    Graph two_k1 = p3.delete_vertices(VertexSet::single(1));
    CHECK(two_k1.order() == 2);
    CHECK(two_k1.edge_count() == 0);

    Graph k3 = make_standard(StandardKind::complete, 3);
    CHECK(k3.delete_vertices(VertexSet{}) == k3);

    // P_4 minus vertex 1: survivors 0,2,3 relabel to 0,1,2; only 2-3 kept
    Graph p4 = make_standard(StandardKind::path, 4);
    Graph g = p4.delete_vertices(VertexSet::single(1));
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 2));

    // spider K_1*4K_2 minus the closed neighborhood of the hub
    Graph spider = star_product(1, {2, 2, 2, 2});
    Graph tips = spider.delete_vertices(spider.closed_neighborhood(0));
    CHECK(tips.order() == 4);
    CHECK(tips.edge_count() == 0);

    VertexSet bad = VertexSet::single(5);
    CHECK_THROWS_AS(p3.delete_vertices(bad), std::invalid_argument);
}

TEST_CASE("delete_edge and add_edge") {
    Graph k3 = make_standard(StandardKind::complete, 3);
    Graph p3 = k3.delete_edge(0, 1);
    std::vector<int> deg = degree_sequence(p3);
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{1, 1, 2});

    Graph p2 = make_standard(StandardKind::path, 2);
    CHECK(p2.delete_edge(0, 1).edge_count() == 0);

    Graph c4 = make_standard(StandardKind::cycle, 4);
    Graph p4 = c4.delete_edge(0, 1);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.is_tree());

    CHECK_THROWS_AS(p3.delete_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(p2.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(p2.add_edge(1, 1), std::invalid_argument);
    CHECK(p2.delete_edge(0, 1).add_edge(0, 1) == p2);
}

TEST_CASE("closed neighborhoods") {
    Graph p3 = make_standard(StandardKind::path, 3);
    CHECK(p3.closed_neighborhood(1) == VertexSet::all(3));
    Graph k1(1, {});
    CHECK(k1.closed_neighborhood(0) == VertexSet::single(0));
    Graph k3 = make_standard(StandardKind::complete, 3);
    CHECK(k3.closed_neighborhood(0) == VertexSet::all(3));
    CHECK_THROWS_AS(p3.closed_neighborhood(3), std::invalid_argument);
}

TEST_CASE("components") {
    Graph mix = make_units(2, 1); // vertices 0,1 isolated; edge 2-3
    auto comps = mix.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].order() == 1);
    CHECK(comps[1].order() == 1);
    CHECK(comps[2].order() == 2);
    CHECK(comps[2].edge_count() == 1);

    Graph p5 = make_standard(StandardKind::path, 5);
    CHECK(p5.components().size() == 1);
    CHECK(p5.components()[0] == p5);

    Graph spider = star_product(1, {2, 2, 2, 2});
    auto legs = spider.delete_vertices(VertexSet::single(0)).components();
    REQUIRE(legs.size() == 4);
    for (const Graph& leg : legs) {
        CHECK(leg.order() == 2);
        CHECK(leg.edge_count() == 1);
    }

    CHECK(Graph(0, {}).components().empty());

    // components partition the vertex set
    int total = 0;
    for (const Graph& c : spider.components()) total += c.order();
    CHECK(total == spider.order());
}

TEST_CASE("twins") {
    Graph k3 = make_standard(StandardKind::complete, 3);
    CHECK(k3.are_true_twins(0, 1));
    CHECK(k3.are_true_twins(1, 2));
    CHECK_FALSE(k3.are_false_twins(0, 1));

    Graph two_k1(2, {});
    CHECK(two_k1.are_false_twins(0, 1));
    CHECK_FALSE(two_k1.are_true_twins(0, 1));

    Graph p3 = make_standard(StandardKind::path, 3);
    CHECK(p3.are_false_twins(0, 2));

    CHECK_THROWS_AS(k3.are_true_twins(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(k3.are_false_twins(1, 1), std::invalid_argument);
}

TEST_CASE("true twins become false twins after deleting their edge") {
    std::mt19937_64 rng(7);
    int seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = test::random_relabel(make_standard(StandardKind::complete, n), rng);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        // thin the complete graph randomly, keeping it simple
        for (auto [u, v] : g.edges())
            if (coin(rng) < 0.45 && g.adjacent(u, v)) g = g.delete_edge(u, v);
        for (auto [u, v] : g.edges())
            if (g.are_true_twins(u, v)) {
                CHECK(g.delete_edge(u, v).are_false_twins(u, v));
                ++seen;
            }
    }
    CHECK(seen > 10); // the property fired on a healthy number of pairs
}

TEST_CASE("cycle space dimension") {
    CHECK(make_standard(StandardKind::path, 7).cycle_space_dim() == 0);
    CHECK(make_standard(StandardKind::star, 4).cycle_space_dim() == 0);
    CHECK(make_standard(StandardKind::cycle, 5).cycle_space_dim() == 1);
    CHECK(make_standard(StandardKind::complete, 4).cycle_space_dim() == 3);
    // disconnected: |E| - |V| + #components
    CHECK(make_units(2, 2).cycle_space_dim() == 0);
}

TEST_CASE("well-formedness after operations") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = test::random_relabel(star_product(2, {3, 2, 1}), rng);
        check_well_formed(g);
        check_well_formed(g.delete_vertices(VertexSet::single(static_cast<int>(rng() % g.order()))));
        auto es = g.edges();
        auto [u, v] = es[rng() % es.size()];
        check_well_formed(g.delete_edge(u, v));
    }
}

TEST_CASE("graph6 decoding") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    CHECK(emit_graph6(Graph(1, {})) == "@");
    CHECK(emit_graph6(Graph(0, {})) == "?");

    Graph p4 = make_standard(StandardKind::path, 4);
    CHECK(parse_graph6(emit_graph6(p4)) == p4);
}

TEST_CASE("graph6 round trip is the identity on labeled graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 20);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long form above 62 vertices") {
    Graph p100 = make_standard(StandardKind::path, 100);
    std::string code = emit_graph6(p100);
    CHECK(code[0] == '~');
    CHECK(parse_graph6(code) == p100);

    Graph p126 = make_standard(StandardKind::path, 126);
    CHECK(parse_graph6(emit_graph6(p126)) == p126);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);      // truncated edge data
    CHECK_THROWS_AS(parse_graph6("Bw?"), Graph6Error);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x20\x20"), Graph6Error); // bytes below 63
    CHECK_THROWS_AS(parse_graph6("AC"), Graph6Error);     // nonzero padding bits (n=2)
    CHECK_THROWS_AS(parse_graph6("~~????"), Graph6Error); // 8-byte size form
    CHECK_THROWS_AS(parse_graph6("~?BG"), Graph6Error);   // n = 200 beyond the cap

    try {
        parse_graph6("Bw?");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.byte_offset() == 2);
    }
}

TEST_CASE("graph6 stream reading") {
    std::istringstream good("Bw\n@\n\nCF\n");
    std::vector<Graph> graphs = read_graph6_stream(good, true);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0].order() == 3);
    CHECK(graphs[1].order() == 1);
    CHECK(graphs[2].order() == 4);

    std::istringstream empty("");
    CHECK(read_graph6_stream(empty, true).empty());

    std::istringstream bad("Bw\njunk junk\n");
    CHECK_THROWS_WITH_AS(read_graph6_stream(bad, true), doctest::Contains("line 2"), Graph6Error);

    std::istringstream lenient_src("Bw\njunk junk\n@\n");
    Graph6Reader reader(lenient_src, false);
    std::vector<Graph> kept;
    while (auto g = reader.next()) kept.push_back(*g);
    CHECK(kept.size() == 2);
    REQUIRE(reader.skipped().size() == 1);
    CHECK(reader.skipped()[0].first == 2);
}
