#include "sc/sc_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "sc/maxflow.hpp"

namespace sc {

namespace {

// Intermediate Gomory-Hu state. Nodes are disjoint vertex groups; every
// incident edge keeps the cut it was created with plus the designated cut
// pair (pair_sc on the SC side). The step-pair rule "last considered vertex
// plus a new vertex" maintains the invariant that all edges incident to a
// node carry the node's anchor as their pair vertex on this side, which is
// exactly what the reconnection case analysis needs.
struct BuildNode {
    VertexSet members;
    int anchor = -1;
    std::vector<int> edges;
    int component = 0;
};

struct BuildEdge {
    int a, b;      // incident node ids
    int pair_sc;   // pair vertex inside the SC side
    int pair_out;  // pair vertex on the other side
    Cost cost;
    VertexSet sc;
    VertexSet opposite;
    bool valid;
};

}  // namespace

CommunityCutTree build_sc_tree(const Graph& g, bool strict) {
    int n = g.vertex_count();
    if (n == 0) throw std::domain_error("build_sc_tree: empty graph");
    std::vector<VertexSet> comp_sets = g.connected_components();
    if (strict && comp_sets.size() > 1)
        throw std::domain_error("build_sc_tree: graph is disconnected (strict mode)");

    std::vector<BuildNode> nodes;
    std::vector<BuildEdge> edges;
    std::vector<int> work;
    for (std::size_t ci = 0; ci < comp_sets.size(); ++ci) {
        nodes.push_back({comp_sets[ci], -1, {}, static_cast<int>(ci)});
        if (comp_sets[ci].size() > 1) work.push_back(static_cast<int>(nodes.size()) - 1);
    }

    long flows = 0;
    for (std::size_t wi = 0; wi < work.size(); ++wi) {
        int nid = work[wi];
        VertexSet members = nodes[nid].members;
        int u = nodes[nid].anchor == -1 ? members.first() : nodes[nid].anchor;
        int v = -1;
        for (int w : members.members())
            if (w != u) { v = w; break; }
        const VertexSet& comp = comp_sets[nodes[nid].component];

        // Both community cuts are computed in G itself. Smallest community
        // cuts never cross the previously chosen ones (checked below), so no
        // contraction or cut bending is needed, and both the chosen SC and
        // the opposite record are exact from the start.
        CommunityCutResult cut = community_cut(g, u, VertexSet::singleton(n, v));
        ++flows;
        VertexSet sc_u = std::move(cut.sc_s);
        VertexSet sc_v = std::move(cut.sc_t);

        bool choose_u = sc_u.size() <= sc_v.size();
        VertexSet chosen = choose_u ? sc_u : sc_v;
        VertexSet other = choose_u ? sc_v : sc_u;
        int s_e = choose_u ? u : v;
        int t_e = choose_u ? v : u;

        VertexSet members_w = members & chosen;
        VertexSet members_r = members - chosen;
        int widx = static_cast<int>(nodes.size());
        nodes.push_back({std::move(members_w), s_e, {}, nodes[nid].component});
        int ridx = static_cast<int>(nodes.size());
        nodes.push_back({std::move(members_r), t_e, {}, nodes[nid].component});

        int new_eid = static_cast<int>(edges.size());
        edges.push_back({widx, ridx, s_e, t_e, cut.cost, chosen, other, true});
        nodes[widx].edges.push_back(new_eid);
        nodes[ridx].edges.push_back(new_eid);

        bool u_in_w = chosen.contains(u);
        std::vector<int> inc = nodes[nid].edges;
        for (int eid : inc) {
            BuildEdge& e = edges[eid];
            int far = e.a == nid ? e.b : e.a;
            // whole far subtree region of this edge
            VertexSet far_region = e.sc.contains(u) ? comp - e.sc : e.sc;
            bool far_in_w = chosen.contains(nodes[far].members.first());
            // the chosen cut must not cross the subtree region
            if (far_in_w ? !far_region.subset_of(chosen) : far_region.intersects(chosen))
                throw std::logic_error("build_sc_tree: chosen community cut crosses a subtree");
            int target = far_in_w ? widx : ridx;
            (e.a == nid ? e.a : e.b) = target;
            nodes[target].edges.push_back(eid);

            if (far_in_w == u_in_w) continue;  // pair vertex lands with the edge

            bool node_on_sc = e.sc.contains(u);
            assert((node_on_sc ? e.pair_sc : e.pair_out) == u);
            if (node_on_sc) {
                // split inside the edge's SC: the cut stays a smallest SC for
                // the new pair and the opposite record transfers unchanged
                assert(!far_in_w);
                e.pair_sc = v;
            } else {
                e.pair_out = v;
                if (!far_in_w) {
                    // far subtree disjoint from the chosen side, u inside it
                    assert(u_in_w && s_e == u);
                    if (e.valid && e.opposite.contains(v)) {
                        // opposite unchanged for the new pair
                    } else if (e.valid && !other.contains(e.pair_sc)) {
                        e.opposite = other;  // shares SC(v,u) with the new edge
                    } else {
                        e.valid = false;
                    }
                } else {
                    // far subtree inside the chosen side, u outside
                    assert(!u_in_w && s_e == v);
                    if (!(e.valid && e.opposite.contains(v))) e.valid = false;
                }
            }
        }

        if (nodes[widx].members.size() > 1) work.push_back(widx);
        if (nodes[ridx].members.size() > 1) work.push_back(ridx);
    }

    // second phase: recompute opposite SCs the reconnections invalidated
    for (auto& e : edges) {
        if (e.valid) continue;
        CommunityCutResult res =
            community_cut(g, e.pair_out, VertexSet::singleton(n, e.pair_sc));
        ++flows;
        assert(res.cost == e.cost);
        assert(res.sc_t == e.sc);
        e.opposite = std::move(res.sc_s);
        e.valid = true;
    }

    CommunityCutTree tree;
    tree.g_ = &g;
    tree.in_edge_.assign(n, -1);
    tree.adj_.resize(n);
    tree.flow_count_ = flows;
    for (auto& e : edges) {
        int eid = static_cast<int>(tree.edges_.size());
        assert(e.sc.contains(e.pair_sc) && !e.sc.contains(e.pair_out));
        tree.edges_.push_back({e.pair_sc, e.pair_out, std::move(e.cost), std::move(e.sc),
                               std::move(e.opposite), e.valid});
        const TreeEdge& te = tree.edges_.back();
        if (tree.in_edge_[te.head] != -1)
            throw std::logic_error("build_sc_tree: inconsistent edge orientation");
        tree.in_edge_[te.head] = eid;
        tree.adj_[te.head].emplace_back(te.tail, eid);
        tree.adj_[te.tail].emplace_back(te.head, eid);
    }
    for (auto& list : tree.adj_) std::sort(list.begin(), list.end());
    for (int v = 0; v < n; ++v)
        if (tree.in_edge_[v] == -1) tree.roots_.push_back(v);
    if (tree.roots_.size() != comp_sets.size())
        throw std::logic_error("build_sc_tree: root count does not match components");
    return tree;
}

CommunityCutTree CommunityCutTree::from_parts(const Graph& g, std::vector<TreeEdge> edges,
                                              long flow_count) {
    int n = g.vertex_count();
    CommunityCutTree tree;
    tree.g_ = &g;
    tree.edges_ = std::move(edges);
    tree.in_edge_.assign(n, -1);
    tree.adj_.resize(n);
    tree.flow_count_ = flow_count;
    for (std::size_t e = 0; e < tree.edges_.size(); ++e) {
        const TreeEdge& te = tree.edges_[e];
        if (te.head < 0 || te.head >= n || te.tail < 0 || te.tail >= n || te.head == te.tail)
            throw std::runtime_error("tree: bad edge endpoints");
        if (tree.in_edge_[te.head] != -1)
            throw std::runtime_error("tree: vertex has two incoming edges");
        tree.in_edge_[te.head] = static_cast<int>(e);
        tree.adj_[te.head].emplace_back(te.tail, static_cast<int>(e));
        tree.adj_[te.tail].emplace_back(te.head, static_cast<int>(e));
    }
    for (auto& list : tree.adj_) std::sort(list.begin(), list.end());
    for (int v = 0; v < n; ++v)
        if (tree.in_edge_[v] == -1) tree.roots_.push_back(v);
    if (tree.roots_.empty()) throw std::runtime_error("tree: no root");
    return tree;
}

MaximalSCSet maximal_scs(const CommunityCutTree& tree) {
    MaximalSCSet out;
    std::unordered_map<VertexSet, int, VertexSetHash> index;
    auto add = [&](const VertexSet& set, int edge, bool from_opposite) {
        auto it = index.find(set);
        if (it == index.end()) {
            index.emplace(set, static_cast<int>(out.sets.size()));
            out.sets.push_back({set, {{edge, from_opposite}}});
        } else {
            out.sets[it->second].provenance.push_back({edge, from_opposite});
        }
    };
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
        const TreeEdge& te = tree.edge(static_cast<int>(e));
        if (!te.opposite_valid)
            throw std::runtime_error("maximal_scs: invalid opposite record present");
        add(te.sc, static_cast<int>(e), false);
        add(te.opposite, static_cast<int>(e), true);
    }
    return out;
}

}  // namespace sc
