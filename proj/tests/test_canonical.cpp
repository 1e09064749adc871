#include "doctest.h"

#include <algorithm>
#include <random>

#include "isolation/canonical.hpp"
#include "isolation/enumerate.hpp"
#include "isolation/named_graphs.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("relabelings share one form") {
    Graph d = diamond_graph();
    std::vector<int> perm{0, 1, 2, 3};
    std::string form = canonical_form(d);
    do {
        CHECK(canonical_form(permute(d, perm)) == form);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canonical_form(cycle_graph(5)) != canonical_form(path_graph(5)));
}

TEST_CASE("canonical labeling is a permutation producing an isomorphic graph") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(8, 0.4, rng);
        auto perm = canonical_labeling(g);
        auto sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < 8; ++v) CHECK(sorted[v] == v);
        CHECK(oracle::isomorphic(g, permute(g, perm)));
    }
}

TEST_CASE("invariant under random permutations of larger graphs") {
    std::mt19937_64 rng(3);
    std::vector<Graph> graphs{y_graph(), h15_graph(), complete_bipartite_graph(4, 5),
                              circulant_graph(12, {1, 3}), cycle_graph(20)};
    for (int i = 0; i < 10; ++i) graphs.push_back(random_connected_graph(25, 0.15, rng));
    for (const auto& g : graphs) {
        std::string form = canonical_form(g);
        for (int t = 0; t < 10; ++t)
            CHECK(canonical_form(permute(g, oracle::random_permutation(g.order(), rng))) == form);
    }
}

TEST_CASE("agrees with brute-force isomorphism on pairs of 6-vertex graphs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        Graph a = random_connected_graph(6, 0.35, rng);
        Graph b = random_connected_graph(6, 0.35, rng);
        CHECK(isomorphic(a, b) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("regular graphs with the same degree are told apart") {
    // 3-regular on 6 vertices: the prism and K3,3.
    Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(!isomorphic(prism, complete_bipartite_graph(3, 3)));
    CHECK(!isomorphic(circulant_graph(8, {1, 2}), circulant_graph(8, {1, 3})));
}
