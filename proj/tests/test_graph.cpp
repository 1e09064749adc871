#include "doctest.h"

#include "isolation/graph.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/patterns.hpp"

using namespace isolation;

TEST_CASE("vertex set basics") {
    VertexSet s{3, 70, 1000};
    CHECK(s.count() == 3);
    CHECK(s.first() == 3);
    CHECK(s.next(3) == 70);
    CHECK(s.next(70) == 1000);
    CHECK(s.next(1000) == -1);
    CHECK(s.last() == 1000);
    CHECK(VertexSet::prefix(130).count() == 130);
    CHECK(VertexSet::prefix(130).last() == 129);
    VertexSet t{3, 4};
    CHECK((s & t) == VertexSet{3});
    CHECK((s - t) == VertexSet{70, 1000});
    CHECK((s | t).count() == 4);
    CHECK(VertexSet{}.first() == -1);
    CHECK(VertexSet{}.empty());
}

TEST_CASE("construction rejects bad edges") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidVertex);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.size() == 1);
    g.remove_edge(0, 1);
    CHECK(g.size() == 0);
}

TEST_CASE("closed neighborhood") {
    Graph p3 = path_graph(3);
    CHECK(closed_neighborhood(p3, {1}) == VertexSet{0, 1, 2});
    CHECK(closed_neighborhood(p3, {}).empty());
    Graph d = diamond_graph();
    CHECK(d.degree(0) == 3);
    CHECK(d.degree(1) == 3);
    CHECK(d.degree(2) == 2);
    CHECK(d.degree(3) == 2);
    CHECK(closed_neighborhood(d, {2}) == VertexSet{0, 1, 2});
    CHECK(open_neighborhood(p3, {0, 1}) == VertexSet{2});
    CHECK_THROWS_AS(closed_neighborhood(p3, {5}), InvalidVertex);
}

TEST_CASE("deleting a closed neighborhood") {
    CHECK(delete_closed_neighborhood(complete_graph(4), {0}).graph.order() == 0);

    auto rest = delete_closed_neighborhood(cycle_graph(6), {0});
    CHECK(rest.graph.order() == 3);
    CHECK(rest.graph.size() == 2);
    CHECK(rest.to_parent == std::vector<int>{2, 3, 4});

    Graph h = h15_graph();
    int hub = 4;
    CHECK(h.degree(hub) == h.max_degree());
    auto left = delete_closed_neighborhood(h, {hub});
    CHECK(left.graph.order() == 10);
    CHECK(enumerate_copies(left.graph, PatternFamily::diamond()).size() == 2);
}

TEST_CASE("induced subgraph maps back to parent labels") {
    Graph c = cycle_graph(5);
    auto sub = induced(c, {1, 2, 4});
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 1);
    CHECK(sub.lift(VertexSet{0, 2}) == VertexSet{1, 4});
    auto del = delete_vertices(c, {0});
    CHECK(del.graph.size() == 3);
}

TEST_CASE("components") {
    Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    auto parts = components(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet{0, 1, 2});
    CHECK(parts[1] == VertexSet{3, 4, 5});

    Graph one = cycle_graph(7);
    CHECK(components(one).size() == 1);
    CHECK(components(one)[0] == one.vertices());

    Graph d = disjoint_union(diamond_graph(), Graph(1));
    auto dp = components(d);
    REQUIRE(dp.size() == 2);
    CHECK(dp[0] == VertexSet{0, 1, 2, 3});
    CHECK(dp[1] == VertexSet{4});

    CHECK(components_within(one, {0, 1, 3, 4}).size() == 2);
    CHECK(is_connected(Graph(1)));
    CHECK(!is_connected(Graph(2)));
}

TEST_CASE("edges between sets") {
    CHECK(e_between(complete_graph(4), {0, 1}, {2, 3}) == 4);
    CHECK(e_between(cycle_graph(5), {}, {1, 2}) == 0);
    CHECK(e_between(cycle_graph(5), {0}, {2, 3}) == 0);
    CHECK(e_between(cycle_graph(5), {0}, {1, 4}) == 2);
    CHECK_THROWS_AS(e_between(cycle_graph(5), {0, 1}, {1}), PreconditionError);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(vertex_connectivity(y_graph()) == 4);
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK(vertex_connectivity(Graph(3)) == 0);
    CHECK(vertex_connectivity(complete_bipartite_graph(3, 4)) == 3);
}

TEST_CASE("forest test") {
    CHECK(is_forest(path_graph(6)));
    CHECK(is_forest(Graph(3)));
    CHECK(!is_forest(cycle_graph(3)));
    CHECK(is_forest(complete_bipartite_graph(1, 5)));
}

TEST_CASE("attachments on K1") {
    Graph k1(1);
    Graph pendant = attach(k1, 0, Attachment::pendant);
    CHECK(pendant == complete_graph(2));
    Graph tri = attach(k1, 0, Attachment::triangle);
    CHECK(tri.order() == 3);
    CHECK(tri.size() == 3);
    Graph bridge = attach(k1, 0, Attachment::k3_bridge);
    CHECK(bridge.order() == 4);
    CHECK(bridge.size() == 4);
    CHECK(bridge.degree(0) == 1);
    CHECK_THROWS_AS(attach(k1, 1, Attachment::pendant), InvalidVertex);
    for (auto kind : {Attachment::pendant, Attachment::triangle, Attachment::k3_bridge})
        CHECK(parse_attachment(to_string(kind)) == kind);
}

TEST_CASE("permute relabels edges") {
    Graph p = path_graph(3);
    Graph q = permute(p, {2, 0, 1});
    CHECK(q.adjacent(2, 0));
    CHECK(q.adjacent(0, 1));
    CHECK(!q.adjacent(2, 1));
    auto deg = cycle_graph(4).degree_summary();
    CHECK(deg.delta_max == 2);
    CHECK(deg.delta_min == 2);
}
