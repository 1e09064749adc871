#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

class ExceptionalGraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when no candidate meets the budget. Carries the graph6 string of the input.
class BudgetInvariantError : public std::runtime_error {
public:
    BudgetInvariantError(const std::string& what, std::string g6)
        : std::runtime_error(what + " (graph " + g6 + ")"), g6_(std::move(g6)) {}
    const std::string& g6() const { return g6_; }

private:
    std::string g6_;
};

/// floor(n / 5)
constexpr int budget(int n) { return n / 5; }

/// Isomorphic to the diamond, K4, or the 9-vertex graph Y.
bool is_exceptional(const Graph& g);

struct CaseStep {
    std::string label;
    int depth = 0;
    int order = 0;                ///< vertices in the (sub)graph this step worked on
    std::vector<int> pivots;      ///< vertices added to the isolating set
    std::vector<int> removed;     ///< vertices settled or deleted by this step
    std::vector<int> suborders;   ///< orders of the pieces handed to deeper steps
};

/// For every step, removed.size() + sum(suborders) == order; removed sets are
/// disjoint across steps and the pivots together form the answer.
struct CaseTrace {
    std::vector<CaseStep> steps;

    std::string to_text() const;
    std::string to_json() const;
};

struct ConstructiveStats {
    long moves_evaluated = 0;
    long moves_recursed = 0;
    long fallback_levels = 0;     ///< levels that needed a named-pivot fallback move
    long wide_fallback_levels = 0;///< levels that needed the unrestricted pivot search
};

struct ConstructiveResult {
    VertexSet set;
    CaseTrace trace;
    ConstructiveStats stats;
};

/**
 * Diamond-isolating set of size at most floor(n/5) for a connected graph that
 * is not the diamond, K4 or Y.
 *
 * Recursion on components: strip pendant vertices, hanging triangles and
 * K3 bridges (none of which changes the isolation number), settle orders
 * <= 9 exactly, and otherwise dispatch on the maximum degree. Each case
 * proposes moves (pivots A, deleted set B within N[A]); a move is taken only
 * if |A| plus the budgets of the residual components fits, and the combined
 * set is checked before it is returned.
 *
 * Throws PreconditionError for disconnected input, ExceptionalGraphError for
 * the three exceptional graphs and BudgetInvariantError if every candidate fails.
 */
ConstructiveResult isolating_set_n5(const Graph& g);

}  // namespace isolation
