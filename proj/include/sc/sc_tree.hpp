#pragma once

#include <vector>

#include "sc/cost.hpp"
#include "sc/graph.hpp"
#include "sc/vertex_set.hpp"

namespace sc {

/// Directed edge (tail -> head) of the community-cut tree. The head side of
/// the represented cut is the smallest source community SC(head, tail); the
/// opposite record holds SC(tail, head). Opposite sets double as the
/// membership matrix rows: one bitset per edge, O(1) lookups.
struct TreeEdge {
    int head;
    int tail;
    Cost cost;           // lambda(head, tail)
    VertexSet sc;        // SC(head, tail) == subtree below the edge
    VertexSet opposite;  // SC(tail, head)
    bool opposite_valid;
};

/// Rooted cut tree of smallest community cuts (a forest on disconnected
/// input). Immutable once built; holds a reference to the graph it was
/// built from, which must outlive the tree.
class CommunityCutTree {
public:
    const Graph& graph() const { return *g_; }
    int vertex_count() const { return g_->vertex_count(); }

    const std::vector<TreeEdge>& edges() const { return edges_; }
    const TreeEdge& edge(int e) const { return edges_[e]; }

    /// One root per connected component; a single entry for connected input.
    const std::vector<int>& roots() const { return roots_; }
    int root() const { return roots_.front(); }

    /// Index of the edge whose head is v, -1 for roots.
    int in_edge(int v) const { return in_edge_[v]; }
    int parent(int v) const { return in_edge_[v] == -1 ? -1 : edges_[in_edge_[v]].tail; }

    /// Tree neighbors as (vertex, edge index) pairs.
    const std::vector<std::pair<int, int>>& adjacent(int v) const { return adj_[v]; }

    bool opposite_contains(int e, int v) const { return edges_[e].opposite.contains(v); }

    long flow_count() const { return flow_count_; }

    /// Reassembles a tree from serialized parts, revalidating orientation
    /// and coverage. The graph must outlive the tree.
    static CommunityCutTree from_parts(const Graph& g, std::vector<TreeEdge> edges,
                                       long flow_count);

private:
    friend CommunityCutTree build_sc_tree(const Graph& g, bool strict);

    const Graph* g_ = nullptr;
    std::vector<TreeEdge> edges_;
    std::vector<int> in_edge_;
    std::vector<int> roots_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    long flow_count_ = 0;
};

/// Gomory-Hu construction with smallest community cuts. Opposite SCs are
/// carried through reconnections where the cut-pair case analysis allows it and
/// recomputed by one extra flow each otherwise; at most 2(n-1) flows total.
/// strict = true rejects disconnected input, otherwise a forest is built.
CommunityCutTree build_sc_tree(const Graph& g, bool strict = false);

/// The deduplicated maximal source communities: every edge SC and every
/// opposite SC, n <= |M(G)| <= 2(n-1) for connected G.
struct MaximalSCSet {
    struct Provenance {
        int edge;
        bool from_opposite;
    };
    struct Entry {
        VertexSet set;
        std::vector<Provenance> provenance;
    };
    std::vector<Entry> sets;

    int count() const { return static_cast<int>(sets.size()); }
};

MaximalSCSet maximal_scs(const CommunityCutTree& tree);

}  // namespace sc
