#include "isolation/named_graphs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isolation {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<int> parse_ints(const std::string& text, char sep, const std::string& name) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used > 0 && used == item.size(), "bad parameter in graph name '" + name + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int p, int q) {
    require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
    Graph g(p + q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
    return g;
}

Graph diamond_graph() { return book_graph(2); }

Graph book_graph(int p) {
    require(p >= 1, "book needs p >= 1");
    Graph g(p + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < p; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    require(n >= 1, "circulant needs n >= 1");
    Graph g(n);
    for (int d : offsets) {
        require(d >= 1 && 2 * d <= n, "circulant offset out of range");
        for (int i = 0; i < n; ++i) {
            int j = (i + d) % n;
            if (i != j) g.add_edge(i, j);
        }
    }
    return g;
}

Graph y_graph() { return circulant_graph(9, {1, 2}); }

Graph h15_graph() {
    Graph g(15);
    for (int gadget = 0; gadget < 3; ++gadget) {
        int b = 5 * gadget;
        for (auto [u, v] : diamond_graph().edges()) g.add_edge(b + u, b + v);
        g.add_edge(b + 2, b + 4);
        g.add_edge(b + 3, b + 4);
    }
    g.add_edge(4, 9);
    g.add_edge(9, 14);
    g.add_edge(4, 14);
    return g;
}

Graph make_named(const std::string& name) {
    std::string head = name;
    std::string arg;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        head = name.substr(0, colon);
        arg = name.substr(colon + 1);
    }
    std::transform(head.begin(), head.end(), head.begin(), ::tolower);
    if (arg.empty()) {
        if (head == "diamond" || head == "b2") return diamond_graph();
        if (head == "y") return y_graph();
        if (head == "h15") return h15_graph();
    } else {
        if (head == "path") return path_graph(parse_ints(arg, ',', name).at(0));
        if (head == "cycle") return cycle_graph(parse_ints(arg, ',', name).at(0));
        if (head == "complete") return complete_graph(parse_ints(arg, ',', name).at(0));
        if (head == "book") return book_graph(parse_ints(arg, ',', name).at(0));
        if (head == "complete_bipartite") {
            auto pq = parse_ints(arg, ',', name);
            require(pq.size() == 2, "complete_bipartite needs P,Q");
            return complete_bipartite_graph(pq[0], pq[1]);
        }
        if (head == "circulant") {
            auto colon = arg.find(':');
            require(colon != std::string::npos, "circulant needs N:D1,D2,...");
            int n = parse_ints(arg.substr(0, colon), ',', name).at(0);
            return circulant_graph(n, parse_ints(arg.substr(colon + 1), ',', name));
        }
    }
    throw std::invalid_argument("unknown graph name '" + name + "'");
}

std::vector<std::string> named_graph_examples() {
    return {"path:N",    "cycle:N", "complete:N", "complete_bipartite:P,Q", "diamond",
            "book:P",    "circulant:N:D1,D2", "Y", "H15"};
}

int p3_pivot(const Graph& g, int u) {
    for (int v = 0; v < g.order(); ++v) {
        if (v == u) continue;
        VertexSet rest = g.vertices() - closed_neighborhood(g, VertexSet{v});
        rest.erase(u);
        if (rest.count() != 3) continue;
        int twice_edges = 0;
        rest.for_each([&](int w) { twice_edges += g.neighbors(w).intersection_count(rest); });
        if (twice_edges == 4) return v;  // 3 vertices, 2 edges: always a path
    }
    return -1;
}

YProperties verify_y_properties(const Graph& g) {
    YProperties r;
    const int n = g.order();
    r.connectivity_four = n >= 2 && vertex_connectivity(g) == 4;
    r.four_regular = n > 0 && g.max_degree() == 4 && g.min_degree() == 4;
    r.common_neighbors_le_two = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.neighbors(u).intersection_count(g.neighbors(v)) > 2)
                r.common_neighbors_le_two = false;
    r.p3_pivots = n > 0;
    for (int u = 0; u < n; ++u)
        if (p3_pivot(g, u) < 0) r.p3_pivots = false;
    return r;
}

}  // namespace isolation
