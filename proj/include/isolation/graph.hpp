#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isolation/vertex_set.hpp"

namespace isolation {

class InvalidVertex : public std::out_of_range {
public:
    InvalidVertex(int v, int n)
        : std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n)) {}
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct DegreeSummary {
    int delta_max = 0;
    int delta_min = 0;
    std::vector<int> degrees;
};

/**
 * Undirected simple graph on vertices 0..n-1 stored as dense adjacency rows.
 *
 * Rows hold open neighbourhoods. Edges are only ever added symmetrically and
 * self loops are rejected, so a constructed Graph is always simple.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;  ///< edge count

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Appends an isolated vertex and returns its index.
    int add_vertex();

    VertexSet vertices() const { return VertexSet::prefix(order()); }
    std::vector<std::pair<int, int>> edges() const;

    DegreeSummary degree_summary() const;
    int max_degree() const;
    int min_degree() const;

    /// Throws InvalidVertex if any member of s is >= n.
    void check(const VertexSet& s) const;
    void check(int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

/// Induced subgraph relabeled to 0..m-1; to_parent[i] is the parent index of vertex i.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;

    VertexSet lift(const VertexSet& local) const;
    std::vector<int> lift(const std::vector<int>& local) const;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

Subgraph induced(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& remove);
Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s);

/// Vertex sets of the connected components, ordered by least member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

/// Number of edges with one end in a and the other in b. Requires disjoint sets.
int e_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/**
 * Size of a minimum vertex cut; n-1 for complete graphs and 0 when
 * disconnected. Searches cut candidates of size below the minimum degree in
 * increasing size, so cost grows like C(n, delta-1).
 */
int vertex_connectivity(const Graph& g);

bool is_forest(const Graph& g);

enum class Attachment { pendant, triangle, k3_bridge };

/**
 * Attaches a small gadget at v that cannot take part in any diamond:
 * pendant adds one leaf; triangle adds two vertices forming a triangle with v;
 * k3_bridge adds a disjoint K3 and one edge from v to one of its vertices.
 */
Graph attach(const Graph& g, int v, Attachment kind);

std::string to_string(Attachment kind);
Attachment parse_attachment(const std::string& name);

/// Disjoint union with b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels so that vertex v becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace isolation
