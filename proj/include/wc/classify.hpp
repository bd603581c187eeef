#pragma once

#include <optional>
#include <vector>

#include "wc/graph.hpp"

namespace wc {

/// Condition on the current labeling: for every edge (i,j) with j > i+1 and
/// every i < k < j, {i,k} or {k,j} is an edge.
bool wc_condition_holds(const Graph& g);

/// Same quantification with AND in place of OR.
bool closed_condition_holds(const Graph& g);

/// Searches labelings for one satisfying wc_condition_holds; backtracking
/// with prefix pruning. n <= 10.
std::pair<bool, std::optional<Labeling>> is_weakly_closed(const Graph& g);

/// Searches labelings for one satisfying closed_condition_holds. n <= 10.
std::pair<bool, std::optional<Labeling>> is_closed(const Graph& g);

/// True iff the complement is a disjoint union of cliques; returns the parts
/// ordered by their smallest vertex.
std::pair<bool, std::optional<std::vector<std::vector<int>>>> is_complete_multipartite(
    const Graph& g);

/// Iterated simplicial-vertex elimination; returns a perfect elimination
/// order when chordal.
std::pair<bool, std::optional<std::vector<int>>> is_chordal(const Graph& g);

/// True iff g contains an induced (chordless) cycle of length >= k. k >= 4.
bool has_chordless_cycle_at_least(const Graph& g, int k);

/// Chordless odd cycle of length >= 5.
bool has_induced_odd_hole(const Graph& g);

/// Neither g nor its complement contains an induced odd cycle of length >= 5.
bool is_perfect(const Graph& g);

bool is_tree(const Graph& g);

/// Tree whose non-leaf vertices induce a path (empty and one-vertex
/// remainders count as paths).
bool is_caterpillar(const Graph& g);

/// Some vertex subset of g induces a graph isomorphic to pattern.
bool contains_induced(const Graph& g, const Graph& pattern);

}  // namespace wc
