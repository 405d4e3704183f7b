#pragma once

#include <atomic>
#include <vector>

#include "sc/cost.hpp"
#include "sc/graph.hpp"
#include "sc/vertex_set.hpp"

namespace sc {

/// Exact max-flow between two vertex sets. Both residual reachabilities are
/// reported: source_side is the set of vertices reachable from S in the
/// residual graph (the unique inclusion-minimal minimum-cut side containing
/// S), sink_side the set that can still reach T.
struct FlowResult {
    Cost value;
    VertexSet source_side;
    VertexSet sink_side;
};

/// The two opposite source communities and the indecisive remainder induced
/// by one max-flow between s and T.
struct CommunityCutResult {
    VertexSet sc_s;        // SC(s,T): minimal min-cut side containing s
    VertexSet sc_t;        // SC(T,s): minimal min-cut side containing T
    VertexSet indecisive;  // V minus both
    Cost cost;             // lambda(s,T)
};

FlowResult max_flow(const Graph& g, const VertexSet& source_set, const VertexSet& sink_set);

CommunityCutResult community_cut(const Graph& g, const VertexSet& source_set,
                                 const VertexSet& sink_set);
CommunityCutResult community_cut(const Graph& g, int s, const VertexSet& sink_set);

/// Flow network in residual form over an arbitrary arc list; used directly
/// by the clustering code to run flows in the alpha-augmented graph without
/// materializing Graph objects.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : n_(n), head_(n, -1) {}

    /// Undirected edge: both directions start with the full capacity.
    void add_undirected(int u, int v, const Cost& capacity);

    /// Computes a maximum s-t flow (Dinic). Returns the flow value; residual
    /// capacities are left in place for reachability queries.
    Cost run(int s, int t);

    /// Vertices reachable from s through positive residual capacity.
    VertexSet residual_from(int s) const;
    /// Vertices that reach t through positive residual capacity.
    VertexSet residual_to(int t) const;

    int node_count() const { return n_; }

private:
    struct Arc {
        int to;
        int next;   // next arc index leaving the same tail
        Cost resid;
    };

    bool bfs_levels(int s, int t);
    Cost push(int v, int t, Cost limit);

    int n_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

/// Process-wide counter of max-flow computations, for run reports and the
/// flow-count bounds asserted by callers.
struct FlowCounter {
    static long value() { return counter().load(std::memory_order_relaxed); }
    static void bump() { counter().fetch_add(1, std::memory_order_relaxed); }

private:
    static std::atomic<long>& counter() {
        static std::atomic<long> count{0};
        return count;
    }
};

}  // namespace sc
