#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sc/cost.hpp"
#include "sc/vertex_set.hpp"

namespace sc {

struct GraphEdge {
    int u, v;
    Cost cost;
};

/// Undirected weighted graph with positive edge costs and dense vertex
/// ids 0..n-1. Immutable after construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds from labelled edges. Duplicate edges are merged by summing
    /// costs; self-loops and non-positive costs are rejected.
    static Graph from_edges(int n, std::vector<GraphEdge> edges,
                            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<GraphEdge>& edges() const { return edges_; }

    /// Incident (neighbor, edge index) pairs, ascending by neighbor id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }

    const Cost& weighted_degree(int v) const { return wdeg_[v]; }
    const Cost& total_cost() const { return total_cost_; }
    Cost max_edge_cost() const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// -1 when the label is unknown.
    int vertex_by_label(const std::string& label) const;

    Cost cut_cost(const VertexSet& side) const;
    std::vector<VertexSet> connected_components() const;
    bool connected() const { return n_ <= 1 || connected_components().size() == 1; }

private:
    int n_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<Cost> wdeg_;
    Cost total_cost_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_to_id_;
};

/// Result of contracting vertex groups to compound nodes: a surjection from
/// original ids onto contracted ids plus the member set of every contracted
/// node (singletons included).
struct ContractionMap {
    std::vector<int> to_contracted;      // original id -> contracted id
    std::vector<VertexSet> members;      // contracted id -> original members

    VertexSet expand(const VertexSet& contracted_side) const;
};

/// Contracts each compound to a single node. Parallel edges are merged by
/// summing costs, intra-compound edges disappear. Compounds must be pairwise
/// disjoint; vertices outside every compound stay singletons.
std::pair<Graph, ContractionMap> contract(const Graph& g,
                                          const std::vector<VertexSet>& compounds);

}  // namespace sc
