#pragma once

#include <algorithm>
#include <vector>

namespace isolation {

namespace detail {

// Pattern vertices in BFS order from a maximum-degree vertex, so every vertex
// after the first (within a component) has an already-placed neighbour.
inline std::vector<int> embedding_order(const Graph& pattern) {
    const int k = pattern.order();
    std::vector<int> order;
    std::vector<bool> seen(k, false);
    while (static_cast<int>(order.size()) < k) {
        int root = -1;
        for (int v = 0; v < k; ++v)
            if (!seen[v] && (root < 0 || pattern.degree(v) > pattern.degree(root))) root = v;
        seen[root] = true;
        size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            int v = order[head++];
            pattern.neighbors(v).for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
            });
        }
    }
    return order;
}

}  // namespace detail

template <typename F>
bool for_each_embedding(const Graph& g, const VertexSet& within, const Graph& pattern, F&& visit) {
    const int k = pattern.order();
    if (k == 0) return visit(VertexSet{});
    if (k > within.count()) return false;
    const std::vector<int> order = detail::embedding_order(pattern);
    std::vector<int> image(k, -1);  // indexed by pattern vertex
    std::vector<int> need(k);
    for (int i = 0; i < k; ++i) need[i] = pattern.degree(order[i]);

    std::vector<int> host_degree(g.order(), 0);
    within.for_each([&](int v) { host_degree[v] = g.neighbors(v).intersection_count(within); });

    VertexSet used;
    // Recursive lambda via explicit stack of candidate sets.
    std::vector<VertexSet> candidates(k);
    std::vector<int> cursor(k, -1);

    auto candidates_for = [&](int depth) {
        int pv = order[depth];
        VertexSet c = within - used;
        pattern.neighbors(pv).for_each([&](int pw) {
            if (image[pw] >= 0) c &= g.neighbors(image[pw]);
        });
        VertexSet filtered;
        c.for_each([&](int v) {
            if (host_degree[v] >= need[depth]) filtered.insert(v);
        });
        return filtered;
    };

    int depth = 0;
    candidates[0] = candidates_for(0);
    cursor[0] = -1;
    while (depth >= 0) {
        int pv = order[depth];
        if (image[pv] >= 0) {
            used.erase(image[pv]);
            image[pv] = -1;
        }
        int next = candidates[depth].next(cursor[depth]);
        if (next < 0) {
            --depth;
            continue;
        }
        cursor[depth] = next;
        image[pv] = next;
        used.insert(next);
        if (depth + 1 == k) {
            VertexSet support;
            for (int v : image) support.insert(v);
            if (visit(support)) return true;
            continue;
        }
        ++depth;
        candidates[depth] = candidates_for(depth);
        cursor[depth] = -1;
    }
    return false;
}

}  // namespace isolation
