#pragma once

#include <vector>

#include "sc/sc_tree.hpp"

namespace sc {

enum class ClusterKind { given_sc, derived_sc, overlay_intersection };

struct SCCluster {
    VertexSet members;
    ClusterKind kind;
    int source;  // designated source vertex, -1 when not applicable
};

/// A partition of V produced by the framework queries; the anchors it was
/// built around appear verbatim as clusters.
struct SCClustering {
    std::vector<SCCluster> clusters;
    std::vector<int> cluster_of;
    std::vector<VertexSet> anchors;

    int cluster_count() const { return static_cast<int>(clusters.size()); }
};

struct AnchorSC {
    VertexSet set;
    int source;
};

/// The unique maximal clustering of source communities containing the given
/// SC. O(n) on the prebuilt tree; no flow computations beyond the optional
/// anchor validation (one flow, skipped in trust mode).
SCClustering maximal_sc_clustering(const CommunityCutTree& tree, const AnchorSC& anchor,
                                   bool trust = false);

/// The unique maximal clustering nested in every maximal SC clustering of
/// the given pairwise disjoint SCs. O(kn); non-anchor clusters need not be
/// SCs.
SCClustering overlay_clustering(const CommunityCutTree& tree, const std::vector<AnchorSC>& anchors,
                                bool trust = false);

}  // namespace sc
