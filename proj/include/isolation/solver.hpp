#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "isolation/graph.hpp"
#include "isolation/patterns.hpp"

namespace isolation {

/// sets[i] = N[V(D_i)] for copy D_i. S isolates every copy iff S meets every set.
struct HittingInstance {
    int universe = 0;
    std::vector<VertexSet> sets;
};

HittingInstance build_hitting_instance(const Graph& g, const PatternFamily& f);
HittingInstance build_hitting_instance_within(const Graph& g, const VertexSet& within,
                                              const PatternFamily& f);

bool hits_all(const HittingInstance& instance, const VertexSet& s);

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::int64_t copies_found = 0;
    std::int64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// G - N[S] is F-free.
bool is_isolating(const Graph& g, const PatternFamily& f, const VertexSet& s);

/**
 * Exact isolation number. Components are solved independently and summed.
 * Finite families go through the hitting-set reduction with branch and bound;
 * the cycle family uses iterative deepening on a forest test of the residual.
 */
SolveResult iota_exact(const Graph& g, const PatternFamily& f);

/// Same, for g[within]; the witness uses g's labels.
SolveResult iota_exact_within(const Graph& g, const VertexSet& within, const PatternFamily& f);

/// Greedy upper bound: repeatedly take the vertex meeting most unhit closures,
/// ties to the least index. Finite families only.
VertexSet greedy_isolating(const Graph& g, const PatternFamily& f);

/// Domination number, i.e. iota_exact(g, K1).
int gamma(const Graph& g);

/// iota(g[a], f) + gamma(g[V - a]); an upper bound on iota(g, f).
int iota_upper_partition(const Graph& g, const PatternFamily& f, const VertexSet& a);

}  // namespace isolation
