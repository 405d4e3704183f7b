#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "sc/graph.hpp"

namespace sctest {

using EdgeTriple = std::tuple<int, int, long>;

inline sc::Graph make_graph(int n, const std::vector<EdgeTriple>& triples) {
    std::vector<sc::GraphEdge> edges;
    for (auto [u, v, w] : triples) edges.push_back({u, v, sc::Cost(w)});
    return sc::Graph::from_edges(n, std::move(edges));
}

/// Connected random graph: random spanning tree plus extra edges, integer
/// weights in [1, max_weight].
inline std::vector<EdgeTriple> random_connected_edges(std::mt19937& rng, int n, int max_weight,
                                                      double extra_factor = 1.0) {
    std::vector<EdgeTriple> edges;
    std::uniform_int_distribution<int> weight(1, max_weight);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> prev(0, v - 1);
        edges.emplace_back(prev(rng), v, weight(rng));
    }
    int extra = static_cast<int>(extra_factor * n);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = vertex(rng), v = vertex(rng);
        if (u == v) continue;
        bool dup = false;
        for (auto [a, b, w] : edges) {
            (void)w;
            if ((a == u && b == v) || (a == v && b == u)) dup = true;
        }
        if (!dup) edges.emplace_back(u, v, weight(rng));
    }
    return edges;
}

inline sc::Graph random_connected_graph(std::mt19937& rng, int n, int max_weight,
                                        double extra_factor = 1.0) {
    return make_graph(n, random_connected_edges(rng, n, max_weight, extra_factor));
}

/// Possibly disconnected: each pair independently with the given probability.
inline sc::Graph random_graph(std::mt19937& rng, int n, int max_weight, double p) {
    std::vector<EdgeTriple> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_weight);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v, weight(rng));
    // isolated vertices are fine; Graph allows them
    return make_graph(n, edges);
}

inline sc::VertexSet set_of(int n, std::initializer_list<int> vs) {
    sc::VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}

}  // namespace sctest
