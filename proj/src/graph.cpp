#include "isolation/graph.hpp"

#include <algorithm>
#include <numeric>

namespace isolation {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check(u);
    check(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

int Graph::add_vertex() {
    if (order() >= kMaxVertices) throw std::length_error("graph order limit reached");
    adj_.emplace_back();
    return order() - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

DegreeSummary Graph::degree_summary() const {
    DegreeSummary d;
    d.degrees.resize(order());
    for (int v = 0; v < order(); ++v) d.degrees[v] = degree(v);
    if (!d.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(d.degrees.begin(), d.degrees.end());
        d.delta_min = *lo;
        d.delta_max = *hi;
    }
    return d;
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < order(); ++v) m = std::max(m, degree(v));
    return m;
}

int Graph::min_degree() const {
    if (order() == 0) return 0;
    int m = order();
    for (int v = 0; v < order(); ++v) m = std::min(m, degree(v));
    return m;
}

void Graph::check(const VertexSet& s) const {
    int top = s.last();
    if (top >= order()) throw InvalidVertex(top, order());
}

void Graph::check(int v) const {
    if (v < 0 || v >= order()) throw InvalidVertex(v, order());
}

VertexSet Subgraph::lift(const VertexSet& local) const {
    VertexSet out;
    local.for_each([&](int v) { out.insert(to_parent[v]); });
    return out;
}

std::vector<int> Subgraph::lift(const std::vector<int>& local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    g.check(s);
    VertexSet out = s;
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    return closed_neighborhood(g, s) - s;
}

Subgraph induced(const Graph& g, const VertexSet& keep) {
    g.check(keep);
    Subgraph sub;
    std::vector<int> to_local(g.order(), -1);
    keep.for_each([&](int v) {
        to_local[v] = static_cast<int>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    });
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
    for (int i = 0; i < sub.graph.order(); ++i) {
        int u = sub.to_parent[i];
        (g.neighbors(u) & keep).for_each([&](int w) {
            if (u < w) sub.graph.add_edge(i, to_local[w]);
        });
    }
    return sub;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& remove) {
    g.check(remove);
    return induced(g, g.vertices() - remove);
}

Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
    return delete_vertices(g, closed_neighborhood(g, s));
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> parts;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet part;
        VertexSet frontier;
        frontier.insert(left.first());
        while (!frontier.empty()) {
            part |= frontier;
            VertexSet grown;
            frontier.for_each([&](int v) { grown |= g.neighbors(v); });
            frontier = (grown & left) - part;
        }
        left -= part;
        parts.push_back(part);
    }
    return parts;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int e_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    g.check(a);
    g.check(b);
    if (a.intersects(b)) throw PreconditionError("e_between requires disjoint vertex sets");
    int count = 0;
    a.for_each([&](int v) { count += g.neighbors(v).intersection_count(b); });
    return count;
}

namespace {

// Visits every k-subset of pool (given as a sorted vector) until f returns true.
template <typename F>
bool any_subset(const std::vector<int>& pool, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    int m = static_cast<int>(pool.size());
    if (k > m) return false;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(pool[i]);
        if (f(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int delta = g.min_degree();
    if (delta == n - 1) return n - 1;
    std::vector<int> all = g.vertices().to_vector();
    VertexSet everything = g.vertices();
    for (int k = 1; k < delta; ++k) {
        bool cut = any_subset(all, k, [&](const VertexSet& s) {
            return components_within(g, everything - s).size() > 1;
        });
        if (cut) return k;
    }
    return delta;
}

bool is_forest(const Graph& g) {
    return g.size() + static_cast<int>(components(g).size()) == g.order();
}

Graph attach(const Graph& g, int v, Attachment kind) {
    g.check(v);
    Graph out = g;
    switch (kind) {
        case Attachment::pendant: {
            int x = out.add_vertex();
            out.add_edge(v, x);
            break;
        }
        case Attachment::triangle: {
            int x = out.add_vertex();
            int y = out.add_vertex();
            out.add_edge(v, x);
            out.add_edge(v, y);
            out.add_edge(x, y);
            break;
        }
        case Attachment::k3_bridge: {
            int a = out.add_vertex();
            int b = out.add_vertex();
            int c = out.add_vertex();
            out.add_edge(a, b);
            out.add_edge(b, c);
            out.add_edge(a, c);
            out.add_edge(v, a);
            break;
        }
    }
    return out;
}

std::string to_string(Attachment kind) {
    switch (kind) {
        case Attachment::pendant: return "pendant";
        case Attachment::triangle: return "triangle";
        case Attachment::k3_bridge: return "k3_bridge";
    }
    return "?";
}

Attachment parse_attachment(const std::string& name) {
    if (name == "pendant") return Attachment::pendant;
    if (name == "triangle") return Attachment::triangle;
    if (name == "k3_bridge" || name == "k3-bridge") return Attachment::k3_bridge;
    throw std::invalid_argument("unknown attachment kind '" + name + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
    return out;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace isolation
