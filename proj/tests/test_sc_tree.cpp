#include <doctest.h>

#include <random>

#include "sc/maxflow.hpp"
#include "sc/sc_tree.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace sc;
using namespace sctest;

namespace {

// cheapest edge cost on the tree path between u and v
Cost tree_path_min(const CommunityCutTree& tree, int u, int v) {
    int n = tree.vertex_count();
    std::vector<int> prev_vertex(n, -1), prev_edge(n, -1);
    std::vector<int> stack{u};
    prev_vertex[u] = u;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : tree.adjacent(x)) {
            if (prev_vertex[y] != -1) continue;
            prev_vertex[y] = x;
            prev_edge[y] = e;
            stack.push_back(y);
        }
    }
    REQUIRE(prev_vertex[v] != -1);
    Cost best = tree.edge(prev_edge[v]).cost;
    for (int x = v; x != u; x = prev_vertex[x]) {
        const Cost& c = tree.edge(prev_edge[x]).cost;
        if (c < best) best = c;
    }
    return best;
}

VertexSet subtree_below(const CommunityCutTree& tree, int edge_id) {
    const TreeEdge& e = tree.edge(edge_id);
    VertexSet seen(tree.vertex_count());
    std::vector<int> stack{e.head};
    seen.insert(e.head);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [y, f] : tree.adjacent(x)) {
            if (f == edge_id || seen.contains(y)) continue;
            seen.insert(y);
            stack.push_back(y);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("build_sc_tree: weighted path example") {
    Graph path = make_graph(3, {{0, 1, 2}, {1, 2, 1}});  // a -2- b -1- c
    CommunityCutTree tree = build_sc_tree(path);
    REQUIRE(tree.edges().size() == 2);
    CHECK(tree.root() == 1);  // root sits on the heavy side

    int to_a = tree.in_edge(0);
    REQUIRE(to_a != -1);
    CHECK(tree.edge(to_a).tail == 1);
    CHECK(tree.edge(to_a).cost == Cost(2));
    CHECK(tree.edge(to_a).sc == set_of(3, {0}));

    int to_c = tree.in_edge(2);
    REQUIRE(to_c != -1);
    CHECK(tree.edge(to_c).cost == Cost(1));
    CHECK(tree.edge(to_c).sc == set_of(3, {2}));

    CHECK(tree.flow_count() <= 2 * (3 - 1));

    SUBCASE("maximal SCs of the path") {
        MaximalSCSet m = maximal_scs(tree);
        CHECK(m.count() >= 3);
        CHECK(m.count() <= 4);
        auto has = [&](const VertexSet& s) {
            for (const auto& e : m.sets)
                if (e.set == s) return true;
            return false;
        };
        CHECK(has(set_of(3, {0})));
        CHECK(has(set_of(3, {2})));
        CHECK(has(set_of(3, {0, 1})));
    }
}

TEST_CASE("build_sc_tree: unit star") {
    Graph star = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CommunityCutTree tree = build_sc_tree(star);
    CHECK(tree.root() == 0);
    CHECK(tree.flow_count() == 3);
    for (int leaf = 1; leaf <= 3; ++leaf) {
        int e = tree.in_edge(leaf);
        REQUIRE(e != -1);
        CHECK(tree.edge(e).tail == 0);
        CHECK(tree.edge(e).cost == Cost(1));
        CHECK(tree.edge(e).sc == set_of(4, {leaf}));
        CHECK(tree.edge(e).opposite == set_of(4, {leaf}).complement());
    }

    SUBCASE("opposite_contains is a constant-time membership test") {
        int e = tree.in_edge(1);
        CHECK(tree.opposite_contains(e, 0));       // center is in the opposite
        CHECK_FALSE(tree.opposite_contains(e, 1)); // own leaf is not
    }

    SUBCASE("maximal SCs: leaves and their complements") {
        MaximalSCSet m = maximal_scs(tree);
        CHECK(m.count() >= 4);   // n
        CHECK(m.count() <= 6);   // 2(n-1)
    }
}

TEST_CASE("build_sc_tree: disconnected input") {
    Graph two = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    CHECK_THROWS_AS(build_sc_tree(two, true), std::domain_error);
    CommunityCutTree forest = build_sc_tree(two);
    CHECK(forest.roots().size() == 2);
    CHECK(forest.edges().size() == 4);
}

TEST_CASE("cut-tree validity oracle on random graphs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);  // up to 9
        Graph g = random_connected_graph(rng, n, 5);
        RawGraph raw = to_raw(g);
        CommunityCutTree tree = build_sc_tree(g);
        CHECK(tree.flow_count() <= 2 * (n - 1));
        CHECK(tree.flow_count() >= n - 1);

        // every pair: the cheapest tree-path edge equals the exhaustive lambda
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Cost lambda = oracle_min_cut(raw, 1u << u, 1u << v).value;
                CHECK(tree_path_min(tree, u, v) == lambda);
            }

        for (std::size_t e = 0; e < tree.edges().size(); ++e) {
            const TreeEdge& te = tree.edge(static_cast<int>(e));
            // the edge really represents its own cut
            CHECK(subtree_below(tree, static_cast<int>(e)) == te.sc);
            // smallest-side rule
            CHECK(te.sc.size() <= te.opposite.size());
            CHECK_FALSE(te.sc.intersects(te.opposite));
            CHECK(g.cut_cost(te.sc) == te.cost);
            CHECK(g.cut_cost(te.opposite) == te.cost);
            // from-scratch community cuts agree with both records
            auto fresh = community_cut(g, te.head, VertexSet::singleton(n, te.tail));
            CHECK(fresh.sc_s == te.sc);
            auto fresh_opp = community_cut(g, te.tail, VertexSet::singleton(n, te.head));
            CHECK(fresh_opp.sc_s == te.opposite);
        }
    }
}

TEST_CASE("every source community induces a connected subtree") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);  // up to 7
        Graph g = random_connected_graph(rng, n, 4);
        RawGraph raw = to_raw(g);
        CommunityCutTree tree = build_sc_tree(g);
        for (auto [mask, src] : oracle_all_scs(raw)) {
            (void)src;
            VertexSet s_set = mask_to_set(n, mask);
            // DFS restricted to the set must reach every member
            VertexSet seen(n);
            std::vector<int> stack{s_set.first()};
            seen.insert(s_set.first());
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, e] : tree.adjacent(x)) {
                    (void)e;
                    if (s_set.contains(y) && !seen.contains(y)) {
                        seen.insert(y);
                        stack.push_back(y);
                    }
                }
            }
            CHECK(seen.size() == s_set.size());
        }
    }
}

TEST_CASE("maximal SC set bounds and coverage") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = random_connected_graph(rng, n, 4);
        RawGraph raw = to_raw(g);
        CommunityCutTree tree = build_sc_tree(g);
        MaximalSCSet m = maximal_scs(tree);
        CHECK(m.count() >= n);
        CHECK(m.count() <= 2 * (n - 1));

        // every SC of the graph is nested in some member
        for (auto [mask, src] : oracle_all_scs(raw)) {
            (void)src;
            VertexSet s_set = mask_to_set(n, mask);
            if (s_set.size() == n) continue;  // V itself is no maximal SC member
            bool nested = false;
            for (const auto& entry : m.sets)
                if (s_set.subset_of(entry.set)) nested = true;
            CHECK(nested);
        }

        // in particular every community cut side over ordered pairs
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                if (s == t) continue;
                VertexSet side =
                    mask_to_set(n, oracle_min_cut(raw, 1u << s, 1u << t).min_source_mask);
                bool nested = false;
                for (const auto& entry : m.sets)
                    if (side.subset_of(entry.set)) nested = true;
                CHECK(nested);
            }
    }
}

TEST_CASE("structural invariants hold on mid-size graphs") {
    std::mt19937 rng(977);
    for (int trial = 0; trial < 3; ++trial) {
        int n = 25 + static_cast<int>(rng() % 16);  // 25..40
        Graph g = random_connected_graph(rng, n, 7, 2.0);
        CommunityCutTree tree = build_sc_tree(g);
        CHECK(tree.flow_count() <= 2 * (n - 1));
        for (std::size_t e = 0; e < tree.edges().size(); ++e) {
            const TreeEdge& te = tree.edge(static_cast<int>(e));
            CHECK(subtree_below(tree, static_cast<int>(e)) == te.sc);
            CHECK(te.sc.size() <= te.opposite.size());
            CHECK_FALSE(te.sc.intersects(te.opposite));
            CHECK(g.cut_cost(te.sc) == te.cost);
            CHECK(g.cut_cost(te.opposite) == te.cost);
        }
        MaximalSCSet m = maximal_scs(tree);
        CHECK(m.count() >= n);
        CHECK(m.count() <= 2 * (n - 1));
    }
}

TEST_CASE("tree construction is deterministic") {
    std::mt19937 rng(73);
    Graph g = random_connected_graph(rng, 9, 5);
    CommunityCutTree a = build_sc_tree(g);
    CommunityCutTree b = build_sc_tree(g);
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
        CHECK(a.edge(e).head == b.edge(e).head);
        CHECK(a.edge(e).tail == b.edge(e).tail);
        CHECK(a.edge(e).sc == b.edge(e).sc);
        CHECK(a.edge(e).opposite == b.edge(e).opposite);
    }
}
