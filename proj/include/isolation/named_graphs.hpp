#pragma once

#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);

/// K4 minus the edge {2,3}: vertices 0,1 have degree 3, vertices 2,3 degree 2.
Graph diamond_graph();

/// Spine edge {0,1}; page vertices 2..p+1 adjacent to both spine ends.
Graph book_graph(int p);

/// Vertex i adjacent to i +- d (mod n) for every offset d.
Graph circulant_graph(int n, const std::vector<int>& offsets);

/// The 9-vertex exceptional graph, realised as the circulant C9(1,2).
Graph y_graph();

/**
 * 15-vertex extremal graph: three gadgets, each a diamond plus a connector
 * adjacent to both degree-2 diamond vertices, connectors joined in a triangle.
 * Gadget i occupies 5i..5i+4: diamond on 5i..5i+3 laid out as diamond_graph(),
 * connector 5i+4 adjacent to 5i+2 and 5i+3 (degree 4 in the whole graph).
 */
Graph h15_graph();

/**
 * Constructor lookup by CLI name: path:N, cycle:N, complete:N,
 * complete_bipartite:P,Q, diamond, book:P, circulant:N:D1,D2,..., Y, H15.
 */
Graph make_named(const std::string& name);
std::vector<std::string> named_graph_examples();

struct YProperties {
    bool connectivity_four = false;      ///< kappa = 4
    bool four_regular = false;           ///< Delta = delta = 4
    bool common_neighbors_le_two = false;
    bool p3_pivots = false;              ///< every u has a v leaving P3 outside {u} + N[v]

    bool all() const {
        return connectivity_four && four_regular && common_neighbors_le_two && p3_pivots;
    }
};

YProperties verify_y_properties(const Graph& g);

/// v != u such that g[V - ({u} + N[v])] is a path on 3 vertices, or -1.
int p3_pivot(const Graph& g, int u);

}  // namespace isolation
