#include "sc/communities.hpp"

#include <stdexcept>
#include <vector>

#include "sc/maxflow.hpp"

namespace sc {

namespace {

void check_nontrivial(const Graph& g, const VertexSet& s_set, bool allow_full) {
    if (s_set.empty()) throw std::domain_error("community predicate: S is empty");
    if (!allow_full && s_set.size() == g.vertex_count())
        throw std::domain_error("community predicate: S equals V");
}

// Enumerates proper nonempty U of the member list and applies the strict
// inside-vs-outside comparison shared by the ES and SC definitions. The
// excluded vertex (SC source) is fixed outside U by masking it out.
bool subsets_predominant(const Graph& g, const VertexSet& s_set, int excluded, int guard) {
    std::vector<int> mem;
    for (int v : s_set.members())
        if (v != excluded) mem.push_back(v);
    int k = static_cast<int>(mem.size());
    if (k > guard)
        throw std::length_error("community predicate: subset enumeration guard exceeded");
    if (k == 0) return true;

    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos[mem[i]] = i;

    // edge classification reused across all subsets
    struct Inner { int a, b; Cost cost; };     // both endpoints enumerable
    struct Fixed { int a; Cost cost; };        // enumerable vs. remaining S member
    struct Outer { int a; Cost cost; };        // enumerable vs. V \ S
    std::vector<Inner> inner;
    std::vector<Fixed> fixed;
    std::vector<Outer> outer;
    for (const auto& e : g.edges()) {
        bool iu = s_set.contains(e.u), iv = s_set.contains(e.v);
        int pu = pos[e.u], pv = pos[e.v];
        if (pu != -1 && pv != -1) inner.push_back({pu, pv, e.cost});
        else if (pu != -1 && iv) fixed.push_back({pu, e.cost});
        else if (pv != -1 && iu) fixed.push_back({pv, e.cost});
        else if (pu != -1) outer.push_back({pu, e.cost});
        else if (pv != -1) outer.push_back({pv, e.cost});
    }

    std::uint32_t limit = (k >= 31) ? 0 : (1u << k);  // guard keeps k small
    std::uint32_t last = limit ? limit - 1 : 0xffffffffu;
    // U must be a proper subset of S: when no vertex is excluded, skip the
    // full mask; with an excluded source every mask is already proper.
    std::uint32_t top = (excluded == -1) ? last - 1 : last;
    for (std::uint32_t mask = 1; mask <= top; ++mask) {
        Cost inside(0), outside(0);
        for (const auto& e : inner) {
            bool a = (mask >> e.a) & 1, b = (mask >> e.b) & 1;
            if (a != b) inside += e.cost;
        }
        for (const auto& e : fixed)
            if ((mask >> e.a) & 1) inside += e.cost;
        for (const auto& e : outer)
            if ((mask >> e.a) & 1) outside += e.cost;
        if (!(inside > outside)) return false;
    }
    return true;
}

}  // namespace

bool is_web_community(const Graph& g, const VertexSet& s_set) {
    check_nontrivial(g, s_set, true);
    for (int u : s_set.members()) {
        Cost inside(0), outside(0);
        for (auto [w, idx] : g.incident(u)) {
            const Cost& c = g.edges()[idx].cost;
            if (s_set.contains(w)) inside += c;
            else outside += c;
        }
        if (!(inside > outside)) return false;
    }
    return true;
}

bool is_extreme_set(const Graph& g, const VertexSet& s_set, int guard) {
    check_nontrivial(g, s_set, true);
    if (s_set.size() == 1) return true;  // no proper nonempty subset exists
    return subsets_predominant(g, s_set, -1, guard);
}

bool is_source_community(const Graph& g, const VertexSet& s_set, int source) {
    check_nontrivial(g, s_set, true);
    if (!s_set.contains(source))
        throw std::domain_error("is_source_community: source not in S");
    if (s_set.size() == g.vertex_count()) return g.connected();
    if (s_set.size() == 1) return true;
    VertexSet rest = s_set.complement();
    return community_cut(g, source, rest).sc_s == s_set;
}

bool is_source_community_bruteforce(const Graph& g, const VertexSet& s_set, int source,
                                    int guard) {
    check_nontrivial(g, s_set, true);
    if (!s_set.contains(source))
        throw std::domain_error("is_source_community_bruteforce: source not in S");
    return subsets_predominant(g, s_set, source, guard);
}

}  // namespace sc
