#include "doctest.h"

#include <random>

#include "isolation/enumerate.hpp"
#include "isolation/graph6.hpp"
#include "isolation/named_graphs.hpp"
#include "isolation/solver.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("isolating set examples") {
    auto d = PatternFamily::diamond();
    for (int v = 0; v < 4; ++v) CHECK(is_isolating(diamond_graph(), d, {v}));
    Graph y = y_graph();
    for (int v = 0; v < 9; ++v) CHECK(!is_isolating(y, d, {v}));
    CHECK(is_isolating(cycle_graph(5), d, {}));
    CHECK(!is_isolating(complete_graph(4), d, {}));
}

TEST_CASE("exact values") {
    auto d = PatternFamily::diamond();
    CHECK(iota_exact(complete_graph(4), d).value == 1);
    CHECK(iota_exact(y_graph(), d).value == 2);
    CHECK(iota_exact(h15_graph(), d).value == 3);
    CHECK(iota_exact(path_graph(10), d).value == 0);
    CHECK(iota_exact(path_graph(10), d).witness.empty());
    CHECK(iota_exact(cycle_graph(5), PatternFamily::k2()).value == 2);
    CHECK(iota_exact(cycle_graph(6), PatternFamily::p3()).value == 2);
    CHECK(iota_exact(complete_graph(3), PatternFamily::any_cycle()).value == 1);
    CHECK(iota_exact(Graph(0), d).value == 0);
}

TEST_CASE("witnesses isolate and match the brute-force minimum") {
    std::mt19937_64 rng(1234);
    std::vector<PatternFamily> families{
        PatternFamily::diamond(), PatternFamily::k1(),       PatternFamily::k2(),
        PatternFamily::p3(),      PatternFamily::clique(3),  PatternFamily::star(2),
        PatternFamily::book(3),   PatternFamily::custom(cycle_graph(4))};
    for (int i = 0; i < 120; ++i) {
        int n = 5 + i % 5;
        Graph g = random_connected_graph(n, 0.15 + 0.6 * (i % 7) / 6.0, rng);
        for (const auto& f : families) {
            auto r = iota_exact(g, f);
            CHECK(is_isolating(g, f, r.witness));
            CHECK(r.witness.count() == r.value);
            CHECK_MESSAGE(r.value == oracle::iota(g, f.pattern_graph()), f.name() << " "
                                                                          << encode_g6(g));
        }
        auto c = iota_exact(g, PatternFamily::any_cycle());
        CHECK(c.value == oracle::iota_cycles(g));
        CHECK(is_isolating(g, PatternFamily::any_cycle(), c.witness));
    }
}

TEST_CASE("iota is additive over components") {
    std::mt19937_64 rng(8);
    auto d = PatternFamily::diamond();
    for (int i = 0; i < 30; ++i) {
        Graph a = random_connected_graph(6 + i % 4, 0.5, rng);
        Graph b = random_connected_graph(5 + i % 3, 0.6, rng);
        Graph u = disjoint_union(a, b);
        CHECK(iota_exact(u, d).value == iota_exact(a, d).value + iota_exact(b, d).value);
    }
    Graph three = disjoint_union(disjoint_union(y_graph(), complete_graph(4)), diamond_graph());
    CHECK(iota_exact(three, d).value == 4);
}

TEST_CASE("deleting a closed neighborhood gives an upper bound") {
    std::mt19937_64 rng(77);
    auto d = PatternFamily::diamond();
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected_graph(9, 0.45, rng);
        int base = iota_exact(g, d).value;
        for (int v = 0; v < g.order(); ++v) {
            auto rest = delete_closed_neighborhood(g, {v});
            CHECK(base <= 1 + iota_exact(rest.graph, d).value);
        }
    }
}

TEST_CASE("restricted solve uses parent labels") {
    Graph g = disjoint_union(path_graph(3), complete_graph(4));
    auto r = iota_exact_within(g, {3, 4, 5, 6}, PatternFamily::diamond());
    CHECK(r.value == 1);
    CHECK(r.witness.is_subset_of(VertexSet{3, 4, 5, 6}));
}

TEST_CASE("hitting instance") {
    auto inst = build_hitting_instance(h15_graph(), PatternFamily::diamond());
    CHECK(inst.universe == 15);
    CHECK(inst.sets.size() == 3);
    for (const auto& s : inst.sets) CHECK(!s.empty());
    CHECK(hits_all(inst, {0, 5, 10}));
    CHECK(hits_all(inst, {4, 9, 14}));
    CHECK(!hits_all(inst, {4, 9}));
}

TEST_CASE("hitting set search matches exhaustive search on random instances") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(6, 12);
    for (int t = 0; t < 10000; ++t) {
        int n = size(rng);
        Graph g = random_connected_graph(n, 0.3 + 0.05 * (t % 8), rng);
        auto inst = build_hitting_instance(g, PatternFamily::diamond());
        int best = n;
        if (inst.sets.empty()) best = 0;
        else if (n <= 9)
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                int c = __builtin_popcount(mask);
                if (c >= best) continue;
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) s.insert(v);
                if (hits_all(inst, s)) best = c;
            }
        auto r = iota_exact(g, PatternFamily::diamond());
        CHECK(hits_all(inst, r.witness));
        if (n <= 9) CHECK(r.value == best);
    }
}

TEST_CASE("greedy") {
    auto d = PatternFamily::diamond();
    CHECK(greedy_isolating(diamond_graph(), d).count() == 1);
    CHECK(greedy_isolating(cycle_graph(8), d).empty());
    VertexSet y = greedy_isolating(y_graph(), d);
    CHECK(y.count() == 2);
    CHECK(is_isolating(y_graph(), d, y));
    CHECK_THROWS_AS(greedy_isolating(cycle_graph(3), PatternFamily::any_cycle()), UnsupportedFamily);
}

TEST_CASE("domination number") {
    for (int n = 1; n <= 7; ++n) CHECK(gamma(complete_graph(n)) == 1);
    CHECK(gamma(cycle_graph(6)) == oracle::min_isolating(cycle_graph(6), [](const VertexSet& a) {
              return !a.empty();
          }));
    CHECK(gamma(cycle_graph(6)) == 2);
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) CHECK(gamma(g) <= n / 2);
}

TEST_CASE("partition bound") {
    std::mt19937_64 rng(5);
    auto d = PatternFamily::diamond();
    for (int i = 0; i < 40; ++i) {
        Graph g = random_connected_graph(9, 0.5, rng);
        int exact = iota_exact(g, d).value;
        CHECK(iota_upper_partition(g, d, g.vertices()) == exact);
        CHECK(iota_upper_partition(g, d, {}) == gamma(g));
        VertexSet half{0, 1, 2, 3, 4};
        CHECK(exact <= iota_upper_partition(g, d, half));
    }
}
