#pragma once

// Exhaustive-alpha completeness oracle: every breakpoint of the hierarchy is
// an intersection point of two subset cut-cost lines, so probing every such
// candidate (and a point just below it) visits every level CutC can produce.

#include <set>
#include <vector>

#include "sc/cut_clustering.hpp"

namespace sctest {

/// Canonical partition signature: per vertex the smallest member of its
/// cluster. Two clusterings are equal iff their signatures are.
inline std::vector<int> partition_signature(const sc::Clustering& c, int n) {
    std::vector<int> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = c.cluster(c.cluster_of(v)).members.first();
    return sig;
}

inline std::set<sc::Cost> candidate_alphas(const sc::Graph& g) {
    int n = g.vertex_count();
    // cut-cost line of every nonempty proper-or-full subset
    std::vector<std::pair<sc::Cost, long>> lines;  // (intercept, slope)
    unsigned full = (1u << n) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        sc::Cost intercept(0);
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) intercept += e.cost;
        lines.emplace_back(intercept, __builtin_popcount(mask));
    }
    std::set<sc::Cost> candidates;
    candidates.insert(sc::Cost(0));
    candidates.insert(g.max_edge_cost());
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].second == lines[j].second) continue;
            sc::Cost cross = (lines[i].first - lines[j].first) /
                             sc::Cost(lines[j].second - lines[i].second);
            if (!cross.negative() && cross <= g.max_edge_cost()) candidates.insert(cross);
        }
    return candidates;
}

/// All distinct clusterings CutC can return for any alpha in [0, alpha_0].
inline std::set<std::vector<int>> sweep_levels(const sc::Graph& g) {
    std::set<sc::Cost> candidates = candidate_alphas(g);
    // epsilon below the smallest gap between consecutive candidates
    sc::Cost eps(1);
    sc::Cost prev(0);
    bool first = true;
    for (const auto& c : candidates) {
        if (!first) {
            sc::Cost gap = c - prev;
            if (gap.positive() && gap < eps) eps = gap;
        }
        prev = c;
        first = false;
    }
    eps = eps / sc::Cost(2);

    std::set<std::vector<int>> levels;
    for (const auto& alpha : candidates) {
        levels.insert(partition_signature(sc::cutc(g, alpha), g.vertex_count()));
        sc::Cost below = alpha - eps;
        if (!below.negative())
            levels.insert(partition_signature(sc::cutc(g, below), g.vertex_count()));
    }
    return levels;
}

}  // namespace sctest
