#include "doctest.h"

#include <random>

#include "isolation/constructive.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/solver.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace isolation;

namespace {

bool isolates(const Graph& g, const VertexSet& s) {
    VertexSet alive = g.vertices() - closed_neighborhood(g, s);
    return !oracle::contains_subgraph(g, alive, diamond_graph());
}

}  // namespace

TEST_CASE("budget") {
    CHECK(budget(9) == 1);
    CHECK(budget(10) == 2);
    CHECK(budget(15) == 3);
}

TEST_CASE("exceptional graphs") {
    CHECK(is_exceptional(diamond_graph()));
    CHECK(is_exceptional(complete_graph(4)));
    CHECK(is_exceptional(y_graph()));
    CHECK(!is_exceptional(cycle_graph(5)));
    CHECK(!is_exceptional(circulant_graph(9, {1, 3})));
    CHECK_THROWS_AS(isolating_set_n5(complete_graph(4)), ExceptionalGraphError);
    CHECK_THROWS_AS(isolating_set_n5(y_graph()), ExceptionalGraphError);
    CHECK_THROWS_AS(isolating_set_n5(Graph(2)), PreconditionError);
}

TEST_CASE("small examples") {
    CHECK(isolating_set_n5(cycle_graph(5)).set.empty());
    auto h = isolating_set_n5(h15_graph());
    CHECK(h.set.count() == 3);
    CHECK(isolates(h15_graph(), h.set));
    for (int n = 5; n <= 8; ++n)
        for (const auto& g : enumerate_connected(n))
            if (iota_exact(g, PatternFamily::diamond()).value > 0)
                CHECK(isolating_set_n5(g).set.count() == 1);
}

TEST_CASE("sound on gadget and random graphs") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> order(10, 80);
    std::uniform_real_distribution<double> degree(1.5, 6.0);
    for (int i = 0; i < 1500; ++i) {
        int n = order(rng);
        Graph g = i % 2 ? random_gadget_graph(n, rng) : random_connected_graph(n, degree(rng) / n, rng);
        auto r = isolating_set_n5(g);
        CHECK_MESSAGE(r.set.count() <= budget(n), encode_g6(g));
        CHECK_MESSAGE(is_isolating(g, PatternFamily::diamond(), r.set), encode_g6(g));
    }
}

TEST_CASE("Y hanging off a high-degree vertex") {
    // A degree-5 vertex whose removal leaves Y: the construction must still fit 3 in 15.
    Graph g = disjoint_union(y_graph(), Graph(6));
    for (int i = 10; i < 15; ++i) g.add_edge(9, i);
    g.add_edge(9, 0);
    g.add_edge(10, 11);
    g.add_edge(11, 12);
    auto r = isolating_set_n5(g);
    CHECK(r.set.count() <= budget(g.order()));
    CHECK(isolates(g, r.set));
}

TEST_CASE("trace is well formed") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        Graph g = i % 2 ? random_gadget_graph(30, rng) : random_connected_graph(30, 0.12, rng);
        auto r = isolating_set_n5(g);
        REQUIRE(!r.trace.steps.empty());
        CHECK(r.trace.steps.front().depth == 0);
        CHECK(r.trace.steps.front().order == g.order());
        VertexSet pivots, removed;
        int removed_total = 0;
        for (const auto& s : r.trace.steps) {
            CHECK(!s.label.empty());
            for (int v : s.pivots) pivots.insert(v);
            for (int v : s.removed) removed.insert(v);
            removed_total += static_cast<int>(s.removed.size());
            int accounted = static_cast<int>(s.removed.size());
            for (int o : s.suborders) accounted += o;
            CHECK_MESSAGE(accounted == s.order, s.label);
        }
        CHECK(pivots == r.set);
        CHECK(removed_total == removed.count());
        CHECK(removed == g.vertices());
        auto j = nlohmann::json::parse(r.trace.to_json());
        CHECK(j.is_array());
        CHECK(j.size() == r.trace.steps.size());
        CHECK(!r.trace.to_text().empty());
    }
}

TEST_CASE("never below the isolation number") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        int n = 10 + i % 5;
        Graph g = i % 2 ? random_gadget_graph(n, rng) : random_connected_graph(n, 0.35, rng);
        int iota = iota_exact(g, PatternFamily::diamond()).value;
        auto r = isolating_set_n5(g);
        CHECK(static_cast<int>(r.set.count()) >= iota);
        CHECK(r.set.count() <= budget(n));
    }
}
