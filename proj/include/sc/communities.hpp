#pragma once

#include "sc/graph.hpp"
#include "sc/vertex_set.hpp"

namespace sc {

/// Predicates for the three kinds of predominantly connected communities.
/// The subset-enumerating checks take an explicit guard on |S|; exceeding it
/// is an error, never a silent approximation.

/// Every single vertex of S is strictly stronger connected inside S than to
/// the outside. Runs in O(m) via per-vertex boundary sums.
bool is_web_community(const Graph& g, const VertexSet& s_set);

/// Every proper nonempty subset of S is strictly stronger connected inside.
/// Exhaustive over 2^|S| subsets; |S| must not exceed the guard.
bool is_extreme_set(const Graph& g, const VertexSet& s_set, int guard = 20);

/// Flow-based source-community check: S is an SC of s iff the community cut
/// between s and V \ S has exactly S as its s-side. S = V is accepted and
/// reduces to a connectivity check.
bool is_source_community(const Graph& g, const VertexSet& s_set, int source);

/// Subset-enumerating variant of the SC definition, for cross-checks on
/// small sets.
bool is_source_community_bruteforce(const Graph& g, const VertexSet& s_set, int source,
                                    int guard = 20);

}  // namespace sc
