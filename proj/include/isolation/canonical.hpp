#pragma once

#include <string>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/**
 * Canonical relabeling: perm[v] is the new label of v. Two graphs are
 * isomorphic iff permuting each by its canonical labeling gives equal graphs.
 *
 * Individualization/refinement over equitable partitions, exploring the whole
 * search tree and keeping the lexicographically largest adjacency code.
 * Swapping twin vertices is an automorphism, so only one twin per cell is
 * branched on. Exhaustive leaves keep this exponential for highly symmetric
 * graphs without twins; intended for n <= 10.
 */
std::vector<int> canonical_labeling(const Graph& g);

/// graph6 string of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace isolation
