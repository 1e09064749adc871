#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

class UnsupportedFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * The forbidden family F. Containment is always in the (not necessarily
 * induced) subgraph sense.
 */
class PatternFamily {
public:
    enum class Kind { k1, k2, clique, p3, star, book, diamond, any_cycle, custom };

    static PatternFamily k1() { return PatternFamily(Kind::k1, 0); }
    static PatternFamily k2() { return PatternFamily(Kind::k2, 0); }
    static PatternFamily clique(int k);
    static PatternFamily p3() { return PatternFamily(Kind::p3, 0); }
    /// K_{1,k+1}
    static PatternFamily star(int k);
    /// p triangles sharing one edge
    static PatternFamily book(int p);
    static PatternFamily diamond() { return PatternFamily(Kind::diamond, 0); }
    /// all cycles C_k, k >= 3
    static PatternFamily any_cycle() { return PatternFamily(Kind::any_cycle, 0); }
    /// connected graph with 1..8 vertices
    static PatternFamily custom(Graph pattern);

    /// "diamond", "k1", "k2", "k:4", "p3", "star:2", "book:3", "anycycle", "custom:<g6>"
    static PatternFamily parse(const std::string& spec);

    Kind kind() const { return kind_; }
    int parameter() const { return param_; }
    bool finite() const { return kind_ != Kind::any_cycle; }

    /// The single member graph of a finite family.
    Graph pattern_graph() const;
    std::string name() const;

    friend bool operator==(const PatternFamily& a, const PatternFamily& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_ && a.custom_ == b.custom_;
    }

private:
    PatternFamily(Kind kind, int param) : kind_(kind), param_(param) {}

    Kind kind_;
    int param_;
    std::optional<Graph> custom_;
};

/// True iff g contains some member of f as a subgraph.
bool contains_pattern(const Graph& g, const PatternFamily& f);

/// Same, restricted to the subgraph induced by `within`.
bool contains_pattern_within(const Graph& g, const VertexSet& within, const PatternFamily& f);

/**
 * Vertex supports of all copies of the pattern, deduplicated and sorted.
 * Throws UnsupportedFamily for any_cycle.
 */
std::vector<VertexSet> enumerate_copies(const Graph& g, const PatternFamily& f);
std::vector<VertexSet> enumerate_copies_within(const Graph& g, const VertexSet& within,
                                               const PatternFamily& f);

/**
 * Backtracking search for `pattern` as a subgraph of g[within]. Visits each
 * injective embedding; the callback receives the image vertex set and returns
 * true to stop the search. Returns true if stopped early.
 */
template <typename F>
bool for_each_embedding(const Graph& g, const VertexSet& within, const Graph& pattern, F&& visit);

bool contains_subgraph(const Graph& g, const Graph& pattern);

}  // namespace isolation

#include "isolation/detail/embedding.hpp"
