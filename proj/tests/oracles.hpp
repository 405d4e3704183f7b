#pragma once

// Brute-force reference computations for the property suites. Everything
// here works by exhaustive enumeration over raw edge lists and never calls
// into the flow/tree/clustering code it is used to check.

#include <optional>
#include <tuple>
#include <vector>

#include "sc/cost.hpp"
#include "sc/vertex_set.hpp"
#include "testutil.hpp"

namespace sctest {

struct RawGraph {
    int n;
    std::vector<EdgeTriple> edges;
};

inline sc::Cost raw_cut_cost(const RawGraph& g, unsigned mask) {
    sc::Cost total(0);
    for (auto [u, v, w] : g.edges)
        if (((mask >> u) & 1u) != ((mask >> v) & 1u)) total += sc::Cost(w);
    return total;
}

inline sc::VertexSet mask_to_set(int n, unsigned mask) {
    sc::VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.insert(v);
    return s;
}

struct OracleCut {
    sc::Cost value;
    unsigned min_source_mask;  // unique min-cost side containing S of min cardinality
    unsigned min_sink_mask;    // same for the T side
    bool min_source_unique;    // minimizer uniqueness among min-cost cuts
};

/// Exhaustive minimum S-T cut: enumerates every side containing S and
/// avoiding T. Also reports the minimal side at T (scanning complements).
inline OracleCut oracle_min_cut(const RawGraph& g, unsigned s_mask, unsigned t_mask) {
    unsigned full = (1u << g.n) - 1;
    std::optional<sc::Cost> best;
    // pass 1: minimum cut value
    for (unsigned side = 0; side <= full; ++side) {
        if ((side & s_mask) != s_mask || (side & t_mask) != 0) continue;
        sc::Cost c = raw_cut_cost(g, side);
        if (!best || c < *best) best = c;
    }
    // pass 2: minimal sides on both ends among minimum cuts
    int src_card = g.n + 1, sink_card = g.n + 1;
    unsigned src_mask = 0, sink_mask = 0;
    bool src_unique = true;
    for (unsigned side = 0; side <= full; ++side) {
        if ((side & s_mask) != s_mask || (side & t_mask) != 0) continue;
        if (!(raw_cut_cost(g, side) == *best)) continue;
        int sc = __builtin_popcount(side);
        if (sc < src_card) {
            src_card = sc;
            src_mask = side;
            src_unique = true;
        } else if (sc == src_card && side != src_mask) {
            src_unique = false;
        }
        unsigned other = full & ~side;
        int tc = __builtin_popcount(other);
        if (tc < sink_card) {
            sink_card = tc;
            sink_mask = other;
        }
    }
    return {*best, src_mask, sink_mask, src_unique};
}

/// Source-community test straight from the definition: every subset of
/// S \ {source} is strictly stronger connected within S than to the outside.
inline bool oracle_is_sc(const RawGraph& g, unsigned s_mask, int source) {
    if (!((s_mask >> source) & 1u)) return false;
    unsigned inner = s_mask & ~(1u << source);
    // iterate all nonempty subsets U of inner
    for (unsigned u_set = inner; u_set != 0; u_set = (u_set - 1) & inner) {
        sc::Cost inside(0), outside(0);
        for (auto [a, b, w] : g.edges) {
            bool au = (u_set >> a) & 1u, bu = (u_set >> b) & 1u;
            bool as = (s_mask >> a) & 1u, bs = (s_mask >> b) & 1u;
            if (au && !bu && bs) inside += sc::Cost(w);
            else if (bu && !au && as) inside += sc::Cost(w);
            else if (au && !bs) outside += sc::Cost(w);
            else if (bu && !as) outside += sc::Cost(w);
        }
        if (!(inside > outside)) return false;
    }
    return true;
}

/// All source communities of the graph as (mask, some valid source) pairs;
/// a mask appears once even when several sources work.
inline std::vector<std::pair<unsigned, int>> oracle_all_scs(const RawGraph& g) {
    unsigned full = (1u << g.n) - 1;
    std::vector<std::pair<unsigned, int>> out;
    for (unsigned mask = 1; mask <= full; ++mask) {
        for (int s = 0; s < g.n; ++s) {
            if (!((mask >> s) & 1u)) continue;
            if (oracle_is_sc(g, mask, s)) {
                out.emplace_back(mask, s);
                break;
            }
        }
    }
    return out;
}

inline RawGraph to_raw(const sc::Graph& g) {
    RawGraph raw{g.vertex_count(), {}};
    for (const auto& e : g.edges()) {
        // tests use integer weights only
        raw.edges.emplace_back(e.u, e.v, std::stol(e.cost.str()));
    }
    return raw;
}

inline unsigned set_to_mask(const sc::VertexSet& s) {
    unsigned m = 0;
    for (int v : s.members()) m |= 1u << v;
    return m;
}

}  // namespace sctest
