#include "sc/sc_queries.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sc/communities.hpp"

namespace sc {

namespace {

void validate_anchor(const CommunityCutTree& tree, const AnchorSC& anchor, bool trust) {
    const Graph& g = tree.graph();
    if (anchor.set.empty()) throw std::domain_error("query: empty anchor set");
    if (!anchor.set.contains(anchor.source))
        throw std::domain_error("query: anchor source not inside the anchor set");
    if (!trust && !is_source_community(g, anchor.set, anchor.source))
        throw std::domain_error("query: anchor set is not a source community of its source");
}

// Subtree induced by an SC must be connected (violations mean the anchor is
// no SC, reachable only in trust mode).
void check_induced_subtree(const CommunityCutTree& tree, const VertexSet& set) {
    std::vector<int> stack{set.first()};
    VertexSet seen(tree.vertex_count());
    seen.insert(set.first());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : tree.adjacent(v)) {
            (void)e;
            if (set.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    if (seen.size() != set.size())
        throw std::domain_error("query: anchor does not induce a connected subtree");
}

struct Builder {
    const CommunityCutTree& tree;
    std::vector<int> cluster_of;
    std::vector<SCCluster> clusters;

    explicit Builder(const CommunityCutTree& t)
        : tree(t), cluster_of(t.vertex_count(), -1) {}

    int add(VertexSet members, ClusterKind kind, int source) {
        int id = static_cast<int>(clusters.size());
        for (int v : members.members()) {
            assert(cluster_of[v] == -1);
            cluster_of[v] = id;
        }
        clusters.push_back({std::move(members), kind, source});
        return id;
    }
};

// Core of the maximal SC clustering: climb from the anchor toward the root,
// at each stage dropping off the complete subtrees hanging below the current
// SC (each is the sc of its entering edge) and stepping up through the
// opposite record of the stage's subtree-root edge.
void decompose_component(Builder& b, const AnchorSC& anchor) {
    const CommunityCutTree& tree = b.tree;
    VertexSet current = anchor.set;
    ClusterKind kind = ClusterKind::given_sc;
    int source = anchor.source;
    for (;;) {
        b.add(current, kind, source);
        int subtree_root = -1;
        for (int x : current.members()) {
            int p = tree.parent(x);
            if (p == -1 || !current.contains(p)) {
                assert(subtree_root == -1);
                subtree_root = x;
            }
            for (auto [y, e] : tree.adjacent(x)) {
                if (y == p || current.contains(y)) continue;
                if (b.cluster_of[y] != -1) continue;  // the stage we climbed out of
                // complete subtree below x: exactly the sc of its edge
                b.add(tree.edge(e).sc, ClusterKind::derived_sc, tree.edge(e).head);
            }
        }
        int p = tree.parent(subtree_root);
        if (p == -1) return;  // reached the component root
        const TreeEdge& up = tree.edge(tree.in_edge(subtree_root));
        assert(up.tail == p);
        current = up.opposite;
        kind = ClusterKind::derived_sc;
        source = p;
    }
}

SCClustering finish(Builder&& b, std::vector<VertexSet> anchors) {
    // untouched components (forest mode) become whole clusters
    for (int r : b.tree.roots()) {
        if (b.cluster_of[r] != -1) continue;
        VertexSet comp(b.tree.vertex_count());
        std::vector<int> stack{r};
        comp.insert(r);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : b.tree.adjacent(v)) {
                (void)e;
                if (!comp.contains(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
            }
        }
        b.add(std::move(comp), ClusterKind::derived_sc, r);
    }
    for (int v = 0; v < b.tree.vertex_count(); ++v)
        if (b.cluster_of[v] == -1)
            throw std::logic_error("query: output does not cover V");

    SCClustering out;
    out.anchors = std::move(anchors);
    // deterministic order: by smallest member
    std::vector<int> order(b.clusters.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return b.clusters[x].members.first() < b.clusters[y].members.first();
    });
    out.cluster_of.assign(b.tree.vertex_count(), -1);
    for (int id : order) {
        for (int v : b.clusters[id].members.members())
            out.cluster_of[v] = static_cast<int>(out.clusters.size());
        out.clusters.push_back(std::move(b.clusters[id]));
    }
    return out;
}

}  // namespace

SCClustering maximal_sc_clustering(const CommunityCutTree& tree, const AnchorSC& anchor,
                                   bool trust) {
    validate_anchor(tree, anchor, trust);
    check_induced_subtree(tree, anchor.set);
    Builder b(tree);
    decompose_component(b, anchor);
    return finish(std::move(b), {anchor.set});
}

SCClustering overlay_clustering(const CommunityCutTree& tree, const std::vector<AnchorSC>& anchors,
                                bool trust) {
    if (anchors.empty()) throw std::domain_error("overlay: no anchors given");
    for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j)
            if (anchors[i].set.intersects(anchors[j].set))
                throw std::domain_error("overlay: anchors overlap");
    for (const auto& a : anchors) validate_anchor(tree, a, trust);
    if (anchors.size() == 1) return maximal_sc_clustering(tree, anchors[0], true);

    int n = tree.vertex_count();
    SCClustering base = maximal_sc_clustering(tree, anchors[0], true);
    std::vector<int> color = base.cluster_of;
    int next_color = base.cluster_count();

    for (std::size_t ai = 1; ai < anchors.size(); ++ai) {
        SCClustering omega = maximal_sc_clustering(tree, anchors[ai], true);
        std::vector<int> refined(n, -1);
        // intersect every cluster of omega with the current coloring by a
        // DFS that switches to a fresh color whenever the underlying color
        // changes and restores it on backtrack
        for (const auto& cl : omega.clusters) {
            int start = cl.members.first();
            std::vector<int> color_stack;
            color_stack.push_back(next_color++);
            refined[start] = color_stack.back();
            // iterative DFS with explicit parent tracking
            struct Frame { int v; int parent; std::size_t next; bool pushed; };
            std::vector<Frame> frames;
            frames.push_back({start, -1, 0, true});
            while (!frames.empty()) {
                Frame& f = frames.back();
                if (f.next >= tree.adjacent(f.v).size()) {
                    if (f.pushed && frames.size() > 1) color_stack.pop_back();
                    frames.pop_back();
                    continue;
                }
                auto [w, e] = tree.adjacent(f.v)[f.next++];
                (void)e;
                if (w == f.parent || !cl.members.contains(w) || refined[w] != -1) continue;
                bool change = color[w] != color[f.v];
                if (change) color_stack.push_back(next_color++);
                refined[w] = color_stack.back();
                frames.push_back({w, f.v, 0, change});
            }
            color_stack.pop_back();
        }
        color = std::move(refined);
    }

    // compact colors into clusters
    std::vector<int> remap(next_color, -1);
    std::vector<VertexSet> sets;
    for (int v = 0; v < n; ++v) {
        if (color[v] < 0) throw std::logic_error("overlay: vertex left uncolored");
        if (remap[color[v]] == -1) {
            remap[color[v]] = static_cast<int>(sets.size());
            sets.emplace_back(n);
        }
        sets[remap[color[v]]].insert(v);
    }

    Builder b(tree);
    std::vector<VertexSet> anchor_sets;
    for (const auto& a : anchors) anchor_sets.push_back(a.set);
    for (auto& s : sets) {
        bool given = false;
        int source = -1;
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            if (s == anchors[i].set) {
                given = true;
                source = anchors[i].source;
                break;
            }
        }
        b.add(std::move(s), given ? ClusterKind::given_sc : ClusterKind::overlay_intersection,
              source);
    }
    return finish(std::move(b), std::move(anchor_sets));
}

}  // namespace sc
