#pragma once

// Brute-force reference implementations for tests. Written from the definitions
// only and deliberately slow; none of them use the patterns or solver modules.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace oracle {

using isolation::Graph;
using isolation::VertexSet;

// Every injective map of pattern vertices into `alive`, checked edge by edge.
inline bool contains_subgraph(const Graph& g, const VertexSet& alive, const Graph& pattern) {
    const int k = pattern.order();
    auto pool = alive.to_vector();
    if (static_cast<int>(pool.size()) < k) return false;
    if (k == 0) return true;
    std::vector<int> image(k);
    // Enumerate k-subsets, then all orderings of each subset.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(pool.size());
    while (true) {
        for (int i = 0; i < k; ++i) image[i] = pool[idx[i]];
        std::vector<int> perm = image;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (auto [a, b] : pattern.edges())
                if (!g.adjacent(perm[a], perm[b])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Vertex supports of all pattern copies.
inline std::set<std::vector<int>> copies(const Graph& g, const Graph& pattern) {
    const int n = g.order(), k = pattern.order();
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
        if (contains_subgraph(g, s, pattern)) out.insert(s.to_vector());
    }
    return out;
}

inline VertexSet residual(const Graph& g, unsigned mask) {
    VertexSet alive = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1) alive -= g.neighbors(v) | VertexSet{v};
    return alive;
}

inline bool has_cycle(const Graph& g, const VertexSet& alive) {
    // A forest on k vertices with c components has k - c edges.
    int edges = 0;
    for (auto [u, v] : g.edges()) edges += alive.contains(u) && alive.contains(v);
    int k = alive.count();
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = k;
    for (auto [u, v] : g.edges())
        if (alive.contains(u) && alive.contains(v)) {
            int a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
    return edges > k - comps;
}

// Minimum |S| such that `bad(residual)` is false.
template <typename Bad>
int min_isolating(const Graph& g, Bad bad) {
    const int n = g.order();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < best && !bad(residual(g, mask))) best = size;
    }
    return best;
}

inline int iota(const Graph& g, const Graph& pattern) {
    return min_isolating(g, [&](const VertexSet& alive) { return contains_subgraph(g, alive, pattern); });
}

inline int iota_cycles(const Graph& g) {
    return min_isolating(g, [&](const VertexSet& alive) { return has_cycle(g, alive); });
}

inline bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        });
    }
    return seen.count() == g.order();
}

// Isomorphism-class count of connected graphs on n vertices: every labeled graph,
// keyed by its lexicographically least adjacency string over all n! relabelings.
inline std::size_t connected_classes(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::set<std::string> classes;
    for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
        Graph g(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        if (!connected(g)) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string code;
            for (auto [u, v] : slots) code += g.adjacent(perm[u], perm[v]) ? '1' : '0';
            if (best.empty() || code < best) best = code;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return classes.size();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracle
