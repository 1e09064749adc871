#include "isolation/solver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace isolation {

namespace {

std::vector<VertexSet> closures(const Graph& g, const std::vector<VertexSet>& copies) {
    std::vector<VertexSet> out;
    out.reserve(copies.size());
    for (const auto& copy : copies) out.push_back(closed_neighborhood(g, copy));
    return out;
}

// Drops duplicates and supersets; hitting a subset hits its supersets too.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& k : kept)
            if (k.is_subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

VertexSet greedy_hitting(const std::vector<VertexSet>& sets, const VertexSet& universe) {
    VertexSet chosen;
    std::vector<char> hit(sets.size(), 0);
    size_t left = sets.size();
    while (left > 0) {
        int best = -1;
        int best_count = 0;
        universe.for_each([&](int v) {
            int c = 0;
            for (size_t i = 0; i < sets.size(); ++i)
                if (!hit[i] && sets[i].contains(v)) ++c;
            if (c > best_count) {
                best_count = c;
                best = v;
            }
        });
        chosen.insert(best);
        for (size_t i = 0; i < sets.size(); ++i)
            if (!hit[i] && sets[i].contains(best)) {
                hit[i] = 1;
                --left;
            }
    }
    return chosen;
}

class HittingSearch {
public:
    HittingSearch(const std::vector<VertexSet>& sets, VertexSet incumbent)
        : sets_(sets), best_(incumbent), best_size_(incumbent.count()) {}

    void run() {
        std::vector<int> uncovered(sets_.size());
        std::iota(uncovered.begin(), uncovered.end(), 0);
        search(VertexSet{}, 0, VertexSet{}, uncovered);
    }

    const VertexSet& best() const { return best_; }
    std::int64_t nodes() const { return nodes_; }

private:
    // Greedy packing of pairwise disjoint residual sets; each needs its own vertex.
    int lower_bound(const std::vector<int>& uncovered, const VertexSet& excluded) const {
        std::vector<std::pair<int, int>> by_size;
        by_size.reserve(uncovered.size());
        for (int i : uncovered) by_size.emplace_back((sets_[i] - excluded).count(), i);
        std::sort(by_size.begin(), by_size.end());
        VertexSet used;
        int packed = 0;
        for (auto [size, i] : by_size) {
            VertexSet avail = sets_[i] - excluded;
            if (!avail.intersects(used)) {
                used |= avail;
                ++packed;
            }
        }
        return packed;
    }

    void search(const VertexSet& chosen, int size, VertexSet excluded,
                const std::vector<int>& uncovered) {
        ++nodes_;
        if (uncovered.empty()) {
            if (size < best_size_) {
                best_ = chosen;
                best_size_ = size;
            }
            return;
        }
        if (size + 1 >= best_size_) return;
        if (size + lower_bound(uncovered, excluded) >= best_size_) return;

        // Fail first: the unhit set with the fewest admissible vertices.
        int pick = -1;
        int pick_size = 0;
        for (int i : uncovered) {
            int c = (sets_[i] - excluded).count();
            if (c == 0) return;
            if (pick < 0 || c < pick_size) {
                pick = i;
                pick_size = c;
            }
        }
        std::vector<std::pair<int, int>> branch;  // (-hits, vertex)
        (sets_[pick] - excluded).for_each([&](int v) {
            int hits = 0;
            for (int i : uncovered)
                if (sets_[i].contains(v)) ++hits;
            branch.emplace_back(-hits, v);
        });
        std::sort(branch.begin(), branch.end());

        for (auto [neg_hits, v] : branch) {
            std::vector<int> rest;
            rest.reserve(uncovered.size());
            for (int i : uncovered)
                if (!sets_[i].contains(v)) rest.push_back(i);
            VertexSet next = chosen;
            next.insert(v);
            search(next, size + 1, excluded, rest);
            excluded.insert(v);
            if (size + 1 >= best_size_) return;
        }
    }

    const std::vector<VertexSet>& sets_;
    VertexSet best_;
    int best_size_;
    std::int64_t nodes_ = 0;
};

// Vertex set of a shortest cycle in g[within], or empty if it is a forest.
VertexSet shortest_cycle(const Graph& g, const VertexSet& within) {
    VertexSet best;
    int best_len = 0;
    std::vector<int> dist(g.order());
    std::vector<int> parent(g.order());
    within.for_each([&](int u) {
        (g.neighbors(u) & within).for_each([&](int v) {
            if (v < u) return;
            // BFS from u to v avoiding the edge uv.
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<int> q;
            dist[u] = 0;
            parent[u] = -1;
            q.push(u);
            while (!q.empty() && dist[v] < 0) {
                int x = q.front();
                q.pop();
                (g.neighbors(x) & within).for_each([&](int y) {
                    if (dist[y] >= 0 || (x == u && y == v)) return;
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                });
            }
            if (dist[v] < 0) return;
            int len = dist[v] + 1;
            if (best_len == 0 || len < best_len) {
                best_len = len;
                best = VertexSet{};
                for (int x = v; x >= 0; x = parent[x]) best.insert(x);
            }
        });
    });
    return best;
}

bool forest_within(const Graph& g, const VertexSet& within) {
    return !contains_pattern_within(g, within, PatternFamily::any_cycle());
}

bool cycle_dfs(const Graph& g, const VertexSet& component, int budget, VertexSet& chosen,
               VertexSet excluded, std::int64_t& nodes) {
    ++nodes;
    VertexSet residual = component - closed_neighborhood(g, chosen);
    if (forest_within(g, residual)) return true;
    if (budget == 0) return false;
    VertexSet cycle = shortest_cycle(g, residual);
    VertexSet candidates = (closed_neighborhood(g, cycle) & component) - excluded;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        chosen.insert(v);
        if (cycle_dfs(g, component, budget - 1, chosen, excluded, nodes)) return true;
        chosen.erase(v);
        excluded.insert(v);
    }
    return false;
}

SolveResult solve_component(const Graph& g, const VertexSet& component, const PatternFamily& f) {
    SolveResult r;
    if (!f.finite()) {
        if (forest_within(g, component)) return r;
        for (int k = 1;; ++k) {
            VertexSet chosen;
            if (cycle_dfs(g, component, k, chosen, VertexSet{}, r.nodes_explored)) {
                r.value = k;
                r.witness = chosen;
                r.copies_found = 1;
                return r;
            }
        }
    }
    auto copies = enumerate_copies_within(g, component, f);
    r.copies_found = static_cast<std::int64_t>(copies.size());
    if (copies.empty()) return r;
    auto closed = closures(g, copies);
    for (auto& c : closed) c &= component;
    auto sets = minimal_sets(std::move(closed));
    VertexSet incumbent = greedy_hitting(sets, component);
    HittingSearch search(sets, incumbent);
    search.run();
    r.witness = search.best();
    r.value = r.witness.count();
    r.nodes_explored = search.nodes();
    return r;
}

}  // namespace

HittingInstance build_hitting_instance_within(const Graph& g, const VertexSet& within,
                                              const PatternFamily& f) {
    HittingInstance inst;
    inst.universe = g.order();
    inst.sets = closures(g, enumerate_copies_within(g, within, f));
    for (auto& s : inst.sets) s &= within;
    return inst;
}

HittingInstance build_hitting_instance(const Graph& g, const PatternFamily& f) {
    return build_hitting_instance_within(g, g.vertices(), f);
}

bool hits_all(const HittingInstance& instance, const VertexSet& s) {
    for (const auto& set : instance.sets)
        if (!set.intersects(s)) return false;
    return true;
}

bool is_isolating(const Graph& g, const PatternFamily& f, const VertexSet& s) {
    return !contains_pattern_within(g, g.vertices() - closed_neighborhood(g, s), f);
}

SolveResult iota_exact_within(const Graph& g, const VertexSet& within, const PatternFamily& f) {
    g.check(within);
    auto start = std::chrono::steady_clock::now();
    SolveResult total;
    for (const auto& part : components_within(g, within)) {
        SolveResult r = solve_component(g, part, f);
        total.value += r.value;
        total.witness |= r.witness;
        total.copies_found += r.copies_found;
        total.nodes_explored += r.nodes_explored;
    }
    total.elapsed = std::chrono::steady_clock::now() - start;
    return total;
}

SolveResult iota_exact(const Graph& g, const PatternFamily& f) {
    return iota_exact_within(g, g.vertices(), f);
}

VertexSet greedy_isolating(const Graph& g, const PatternFamily& f) {
    if (!f.finite()) throw UnsupportedFamily("greedy isolation needs a finite pattern family");
    auto sets = closures(g, enumerate_copies(g, f));
    return greedy_hitting(sets, g.vertices());
}

int gamma(const Graph& g) { return iota_exact(g, PatternFamily::k1()).value; }

int iota_upper_partition(const Graph& g, const PatternFamily& f, const VertexSet& a) {
    g.check(a);
    return iota_exact(induced(g, a).graph, f).value +
           gamma(induced(g, g.vertices() - a).graph);
}

}  // namespace isolation
