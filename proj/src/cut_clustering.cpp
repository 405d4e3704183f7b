#include "sc/cut_clustering.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace sc {

AugmentedGraph::AugmentedGraph(const Graph& base, Cost alpha)
    : base_(&base), alpha_(std::move(alpha)), template_(base.vertex_count() + 1) {
    if (alpha_.negative()) throw std::domain_error("augment: negative alpha");
    for (const auto& e : base.edges()) template_.add_undirected(e.u, e.v, e.cost);
    // artificial edges exist for every vertex; at alpha = 0 they carry no capacity
    for (int v = 0; v < base.vertex_count(); ++v) template_.add_undirected(v, t(), alpha_);
}

AugmentedGraph augment(const Graph& g, const Cost& alpha) { return AugmentedGraph(g, alpha); }

CommunityCutResult AugmentedGraph::community_cut_from(int u) const {
    FlowNetwork net = template_;  // fresh residuals
    Cost value = net.run(u, t());
    VertexSet sc_s = net.residual_from(u);
    VertexSet sc_t = net.residual_to(t());
    VertexSet rest = VertexSet::full(net.node_count()) - sc_s - sc_t;
    return {std::move(sc_s), std::move(sc_t), std::move(rest), std::move(value)};
}

std::optional<Cost> intersection_alpha(const CutCostLine& parent, const CutCostLine& child) {
    if (child.slope == parent.slope)
        throw std::domain_error("intersection_alpha: equal slopes");
    if (child.slope > parent.slope)
        throw std::domain_error("intersection_alpha: child must be smaller than parent");
    Cost alpha = (child.intercept - parent.intercept) / Cost(parent.slope - child.slope);
    if (alpha.negative()) return std::nullopt;
    return alpha;
}

Clustering::Clustering(const Graph& g, std::vector<Cluster> clusters, std::optional<Cost> alpha)
    : clusters_(std::move(clusters)), alpha_(std::move(alpha)) {
    int n = g.vertex_count();
    cluster_of_.assign(n, -1);
    std::sort(clusters_.begin(), clusters_.end(),
              [](const Cluster& a, const Cluster& b) { return a.members.first() < b.members.first(); });
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        for (int v : clusters_[i].members.members()) {
            if (cluster_of_[v] != -1)
                throw std::domain_error("Clustering: clusters overlap at vertex " + g.label(v));
            cluster_of_[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (cluster_of_[v] == -1)
            throw std::domain_error("Clustering: vertex " + g.label(v) + " uncovered");
}

Clustering Clustering::singletons(const Graph& g) {
    std::vector<Cluster> cs;
    cs.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        cs.push_back({VertexSet::singleton(g.vertex_count(), v), v, g.weighted_degree(v)});
    return Clustering(g, std::move(cs), std::nullopt);
}

Clustering Clustering::components(const Graph& g) {
    std::vector<Cluster> cs;
    for (auto& comp : g.connected_components()) {
        int rep = comp.first();
        cs.push_back({std::move(comp), rep, Cost(0)});
    }
    return Clustering(g, std::move(cs), Cost(0));
}

bool Clustering::nested_in(const Clustering& coarser) const {
    for (const auto& c : clusters_) {
        int parent = coarser.cluster_of(c.members.first());
        if (!c.members.subset_of(coarser.cluster(parent).members)) return false;
    }
    return true;
}

bool Clustering::same_partition(const Clustering& other) const {
    if (cluster_count() != other.cluster_count()) return false;
    for (const auto& c : clusters_) {
        int j = other.cluster_of(c.members.first());
        if (!(c.members == other.cluster(j).members)) return false;
    }
    return true;
}

Clustering cutc(const Graph& g, const Cost& alpha) {
    if (alpha.negative()) throw std::domain_error("cutc: negative alpha");
    int n = g.vertex_count();
    AugmentedGraph ga(g, alpha);

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.weighted_degree(a) != g.weighted_degree(b))
            return g.weighted_degree(b) < g.weighted_degree(a);
        return a < b;
    });

    struct Found { VertexSet members; int rep; };
    std::vector<Found> found;
    VertexSet covered(n);
    long flows = 0;
    for (int u : order) {
        if (covered.contains(u)) continue;
        CommunityCutResult res = ga.community_cut_from(u);
        ++flows;
        assert(!res.sc_s.contains(ga.t()));
        VertexSet community(n);
        for (int v : res.sc_s.members()) community.insert(v);

        // a community of a later vertex swallows earlier ones whole
        std::vector<Found> kept;
        kept.reserve(found.size() + 1);
        for (auto& f : found) {
            if (community.contains(f.rep)) {
                assert(f.members.subset_of(community));
            } else {
                kept.push_back(std::move(f));
            }
        }
        found = std::move(kept);
        covered = covered | community;
        found.push_back({std::move(community), u});
    }

    // boundary costs for all clusters in one edge scan
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < found.size(); ++i)
        for (int v : found[i].members.members()) owner[v] = static_cast<int>(i);
    std::vector<Cost> boundary(found.size(), Cost(0));
    for (const auto& e : g.edges()) {
        if (owner[e.u] != owner[e.v]) {
            boundary[owner[e.u]] += e.cost;
            boundary[owner[e.v]] += e.cost;
        }
    }

    std::vector<Cluster> clusters;
    clusters.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        clusters.push_back({std::move(found[i].members), found[i].rep, std::move(boundary[i])});
    Clustering result(g, std::move(clusters), alpha);
    result.set_flows_used(flows);
    return result;
}

Cost alpha_m(const Clustering& fine, const Clustering& coarse) {
    if (fine.cluster_count() <= coarse.cluster_count())
        throw std::domain_error("alpha_m: clusterings must differ and be nested");
    if (!fine.nested_in(coarse)) throw std::domain_error("alpha_m: not hierarchically nested");

    // one pass over the children, bucketing intersection maxima per parent
    std::vector<std::optional<Cost>> lambda(coarse.cluster_count());
    std::vector<bool> unchanged(coarse.cluster_count(), false);
    for (int c = 0; c < fine.cluster_count(); ++c) {
        const Cluster& child = fine.cluster(c);
        int p = coarse.cluster_of(child.members.first());
        if (child.members.size() == coarse.cluster(p).members.size()) {
            unchanged[p] = true;  // same cluster on both levels: nothing merges here
            continue;
        }
        auto cross = intersection_alpha(coarse.line(p), fine.line(c));
        if (cross && (!lambda[p] || *cross > *lambda[p])) lambda[p] = *cross;
    }
    std::optional<Cost> best;
    for (int p = 0; p < coarse.cluster_count(); ++p) {
        if (unchanged[p]) continue;
        if (!lambda[p]) throw std::logic_error("alpha_m: parent without intersecting child");
        if (!best || *lambda[p] < *best) best = *lambda[p];
    }
    if (!best) throw std::logic_error("alpha_m: no strict parent found");
    return *best;
}

namespace {

struct LevelStore {
    std::vector<HierarchyLevel> levels;  // unsorted during search
    std::map<int, Cost> breakpoint_by_count;  // keyed by the finer level's cluster count
    long calls = 0;
    long flows = 0;

    int add(Clustering c, Cost alpha) {
        levels.push_back({std::move(c), std::move(alpha)});
        return static_cast<int>(levels.size()) - 1;
    }
};

void parametric_rec(const Graph& g, LevelStore& store, int fine, int coarse) {
    Cost am = alpha_m(store.levels[fine].clustering, store.levels[coarse].clustering);
    Clustering mid = cutc(g, am);
    ++store.calls;
    store.flows += mid.flows_used();
    if (mid.cluster_count() == store.levels[fine].clustering.cluster_count()) {
        // nesting makes equal counts mean equal partitions
        assert(mid.same_partition(store.levels[fine].clustering));
        store.breakpoint_by_count.emplace(store.levels[fine].clustering.cluster_count(), am);
        return;
    }
    int mid_id = store.add(std::move(mid), am);
    parametric_rec(g, store, fine, mid_id);
    parametric_rec(g, store, mid_id, coarse);
}

Hierarchy assemble(LevelStore&& store, bool with_breakpoints) {
    std::sort(store.levels.begin(), store.levels.end(), [](const HierarchyLevel& a, const HierarchyLevel& b) {
        return a.clustering.cluster_count() > b.clustering.cluster_count();
    });
    Hierarchy h;
    h.levels = std::move(store.levels);
    h.cutc_calls = store.calls;
    h.flow_computations = store.flows;
    for (std::size_t i = 0; i + 1 < h.levels.size(); ++i) {
        if (with_breakpoints) {
            auto it = store.breakpoint_by_count.find(h.levels[i].clustering.cluster_count());
            if (it == store.breakpoint_by_count.end())
                throw std::logic_error("hierarchy: missing breakpoint between consecutive levels");
            h.breakpoints.push_back(it->second);
        } else {
            h.breakpoints.push_back(std::nullopt);
        }
    }
    return h;
}

}  // namespace

Hierarchy complete_hierarchy(const Graph& g) {
    if (g.vertex_count() == 0) throw std::domain_error("complete_hierarchy: empty graph");
    LevelStore store;
    int fine = store.add(Clustering::singletons(g), g.max_edge_cost());
    Clustering comps = Clustering::components(g);
    if (comps.cluster_count() == g.vertex_count()) {
        // no edges: both trivial levels coincide, h = 1
        return assemble(std::move(store), true);
    }
    int coarse = store.add(std::move(comps), Cost(0));
    parametric_rec(g, store, fine, coarse);
    return assemble(std::move(store), true);
}

Hierarchy binary_search_hierarchy(const Graph& g, const Cost& step) {
    if (!step.positive()) throw std::domain_error("binary_search_hierarchy: step must be positive");
    if (g.vertex_count() == 0) throw std::domain_error("binary_search_hierarchy: empty graph");

    Cost alpha0 = g.max_edge_cost();
    LevelStore store;
    std::vector<int> by_count(g.vertex_count() + 1, -1);
    int fine = store.add(Clustering::singletons(g), alpha0);
    Clustering comps = Clustering::components(g);
    if (comps.cluster_count() == g.vertex_count()) return assemble(std::move(store), false);
    int coarse = store.add(std::move(comps), Cost(0));
    by_count[g.vertex_count()] = fine;
    by_count[store.levels[coarse].clustering.cluster_count()] = coarse;

    // grid points k*step for k = 0..K, with alpha0 itself as the final point
    mpq_class ratio = (alpha0 / step).raw();
    mpz_class whole = ratio.get_num() / ratio.get_den();
    bool exact = ratio.get_num() % ratio.get_den() == 0;
    if (!whole.fits_slong_p())
        throw std::domain_error("binary_search_hierarchy: step too small for range");
    long last = whole.get_si() + (exact ? 0 : 1);
    auto grid = [&](long k) { return (k == last && !exact) ? alpha0 : step * Cost(k); };

    // recursive bisection over grid indices; lower alpha = coarser
    std::vector<std::pair<std::pair<long, long>, std::pair<int, int>>> stack;
    stack.push_back({{0, last}, {coarse, fine}});
    while (!stack.empty()) {
        auto [range, lvls] = stack.back();
        stack.pop_back();
        auto [lo, hi] = range;
        auto [lo_level, hi_level] = lvls;
        if (hi - lo <= 1) continue;
        if (store.levels[lo_level].clustering.cluster_count() ==
            store.levels[hi_level].clustering.cluster_count())
            continue;
        long mid = lo + (hi - lo) / 2;
        Clustering mid_c = cutc(g, grid(mid));
        ++store.calls;
        store.flows += mid_c.flows_used();
        int count = mid_c.cluster_count();
        int mid_level = by_count[count];
        if (mid_level == -1) {
            mid_level = store.add(std::move(mid_c), grid(mid));
            by_count[count] = mid_level;
        }
        stack.push_back({{lo, mid}, {lo_level, mid_level}});
        stack.push_back({{mid, hi}, {mid_level, hi_level}});
    }
    return assemble(std::move(store), false);
}

Cost modularity(const Graph& g, const Clustering& clustering) {
    if (!g.total_cost().positive())
        throw std::domain_error("modularity: undefined for graphs without edges");
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (clustering.cluster_of(v) < 0 || clustering.cluster_of(v) >= clustering.cluster_count())
            throw std::domain_error("modularity: clustering does not cover V");

    const Cost& total = g.total_cost();
    int k = clustering.cluster_count();
    std::vector<Cost> internal(k, Cost(0)), degree(k, Cost(0));
    for (const auto& e : g.edges()) {
        int cu = clustering.cluster_of(e.u);
        if (cu == clustering.cluster_of(e.v)) internal[cu] += e.cost;
    }
    for (int v = 0; v < n; ++v) degree[clustering.cluster_of(v)] += g.weighted_degree(v);
    Cost q(0);
    for (int c = 0; c < k; ++c) {
        Cost frac = degree[c] / (Cost(2) * total);
        q += internal[c] / total - frac * frac;
    }
    return q;
}

}  // namespace sc
