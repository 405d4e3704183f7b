#pragma once

#include <optional>
#include <vector>

#include "sc/cost.hpp"
#include "sc/graph.hpp"
#include "sc/maxflow.hpp"
#include "sc/vertex_set.hpp"

namespace sc {

/// G with an artificial vertex t (id n) connected to every vertex by an edge
/// of cost alpha. Cost-0 artificial edges exist only here (alpha = 0) and
/// carry zero flow capacity.
class AugmentedGraph {
public:
    AugmentedGraph(const Graph& base, Cost alpha);

    const Graph& base() const { return *base_; }
    int t() const { return base_->vertex_count(); }
    const Cost& alpha() const { return alpha_; }
    int artificial_edge_count() const { return base_->vertex_count(); }

    /// Community cut between u and t in G_alpha.
    CommunityCutResult community_cut_from(int u) const;

private:
    const Graph* base_;
    Cost alpha_;
    FlowNetwork template_;  // pristine residuals, copied per flow
};

AugmentedGraph augment(const Graph& g, const Cost& alpha);

/// The affine cut-cost function of a vertex set S in the augmented graph:
/// intercept c(S, V \ S), slope |S|.
struct CutCostLine {
    Cost intercept;
    long slope;
};

/// Intersection point of a parent cluster's line with a strictly smaller
/// child's; none when the lines meet at negative alpha.
std::optional<Cost> intersection_alpha(const CutCostLine& parent, const CutCostLine& child);

struct Cluster {
    VertexSet members;
    int representative;
    Cost boundary;  // c(C, V \ C) in the base graph
};

/// A partition of V with per-cluster representative, size and boundary cost.
class Clustering {
public:
    Clustering() = default;
    Clustering(const Graph& g, std::vector<Cluster> clusters, std::optional<Cost> alpha);

    static Clustering singletons(const Graph& g);
    static Clustering components(const Graph& g);

    int cluster_count() const { return static_cast<int>(clusters_.size()); }
    const std::vector<Cluster>& clusters() const { return clusters_; }
    const Cluster& cluster(int i) const { return clusters_[i]; }
    int cluster_of(int v) const { return cluster_of_[v]; }
    const std::optional<Cost>& alpha() const { return alpha_; }
    long flows_used() const { return flows_used_; }
    void set_flows_used(long f) { flows_used_ = f; }

    CutCostLine line(int i) const { return {clusters_[i].boundary, clusters_[i].members.size()}; }

    /// True when every cluster of this clustering is contained in a cluster
    /// of the coarser one.
    bool nested_in(const Clustering& coarser) const;
    bool same_partition(const Clustering& other) const;

private:
    std::vector<Cluster> clusters_;
    std::vector<int> cluster_of_;
    std::optional<Cost> alpha_;
    long flows_used_ = 0;
};

/// One run of the cut clustering algorithm at a fixed alpha: vertices in
/// non-increasing weighted-degree order (ties by id), one community cut per
/// uncovered vertex, previously found clusters swallowed by a new community
/// are dropped.
Clustering cutc(const Graph& g, const Cost& alpha);

/// alpha_m of the parametric search: per parent cluster the
/// maximum intersection point with its strict children, minimized over
/// parents. Requires fine < coarse strictly.
Cost alpha_m(const Clustering& fine, const Clustering& coarse);

struct HierarchyLevel {
    Clustering clustering;
    Cost alpha_produced;
};

/// Ordered chain of clusterings, finest (singletons) first, with the exact
/// breakpoint between consecutive levels where known. The breakpoint alpha'
/// is the value at which cutc still returns the finer level; the coarser one
/// appears for alpha' - epsilon.
struct Hierarchy {
    std::vector<HierarchyLevel> levels;
    std::vector<std::optional<Cost>> breakpoints;  // size = levels - 1
    long cutc_calls = 0;
    long flow_computations = 0;

    int level_count() const { return static_cast<int>(levels.size()); }
};

/// Exact parametric breakpoint search. Both trivial levels are seeded
/// without CutC; every other level is found by recursive alpha_m probing,
/// 2(h-2)+1 CutC invocations in total (1 when h = 2).
Hierarchy complete_hierarchy(const Graph& g);

/// Binary-search baseline over the range [0, alpha_0] discretized with the
/// given step. Completeness is not guaranteed; breakpoints stay unset.
Hierarchy binary_search_hierarchy(const Graph& g, const Cost& step);

/// Weighted Newman-Girvan modularity of a partition.
Cost modularity(const Graph& g, const Clustering& clustering);

}  // namespace sc
