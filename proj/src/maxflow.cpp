#include "sc/maxflow.hpp"

#include <queue>
#include <stdexcept>

namespace sc {

void FlowNetwork::add_undirected(int u, int v, const Cost& capacity) {
    arcs_.push_back({v, head_[u], capacity});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], capacity});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
}

bool FlowNetwork::bfs_levels(int s, int t) {
    level_.assign(n_, -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
            if (level_[arcs_[a].to] == -1 && arcs_[a].resid.positive()) {
                level_[arcs_[a].to] = level_[v] + 1;
                q.push(arcs_[a].to);
            }
        }
    }
    return level_[t] != -1;
}

Cost FlowNetwork::push(int v, int t, Cost limit) {
    if (v == t) return limit;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
        Arc& arc = arcs_[a];
        if (!arc.resid.positive() || level_[arc.to] != level_[v] + 1) continue;
        Cost pushed = push(arc.to, t, limit < arc.resid ? limit : arc.resid);
        if (pushed.positive()) {
            arc.resid -= pushed;
            arcs_[a ^ 1].resid += pushed;
            return pushed;
        }
    }
    return Cost(0);
}

Cost FlowNetwork::run(int s, int t) {
    if (s == t) throw std::domain_error("max_flow: source equals sink");
    FlowCounter::bump();
    Cost total(0);
    while (bfs_levels(s, t)) {
        iter_ = head_;
        for (;;) {
            // no finite bottleneck exceeds the total capacity at the source
            Cost cap(0);
            for (int a = head_[s]; a != -1; a = arcs_[a].next) cap += arcs_[a].resid;
            if (!cap.positive()) break;
            Cost pushed = push(s, t, cap);
            if (!pushed.positive()) break;
            total += pushed;
        }
    }
    return total;
}

VertexSet FlowNetwork::residual_from(int s) const {
    VertexSet seen(n_);
    std::queue<int> q;
    seen.insert(s);
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
            if (!seen.contains(arcs_[a].to) && arcs_[a].resid.positive()) {
                seen.insert(arcs_[a].to);
                q.push(arcs_[a].to);
            }
        }
    }
    return seen;
}

VertexSet FlowNetwork::residual_to(int t) const {
    VertexSet seen(n_);
    std::queue<int> q;
    seen.insert(t);
    q.push(t);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        // arc a leaves v toward w; its partner a^1 runs w -> v
        for (int a = head_[v]; a != -1; a = arcs_[a].next) {
            int w = arcs_[a].to;
            if (!seen.contains(w) && arcs_[a ^ 1].resid.positive()) {
                seen.insert(w);
                q.push(w);
            }
        }
    }
    return seen;
}

namespace {

FlowNetwork build_network(const Graph& g) {
    FlowNetwork net(g.vertex_count());
    for (const auto& e : g.edges()) net.add_undirected(e.u, e.v, e.cost);
    return net;
}

struct ContractedFlow {
    Cost value;
    VertexSet source_side;  // original ids
    VertexSet sink_side;    // original ids
};

ContractedFlow flow_between_sets(const Graph& g, const VertexSet& source_set,
                                 const VertexSet& sink_set) {
    if (source_set.empty() || sink_set.empty())
        throw std::domain_error("max_flow: empty terminal set");
    if (source_set.intersects(sink_set))
        throw std::domain_error("max_flow: source and sink sets intersect");

    if (source_set.size() == 1 && sink_set.size() == 1) {
        FlowNetwork net = build_network(g);
        int s = source_set.first();
        int t = sink_set.first();
        Cost value = net.run(s, t);
        return {value, net.residual_from(s), net.residual_to(t)};
    }

    // compound terminals become single nodes of a contracted graph
    std::vector<VertexSet> compounds;
    if (source_set.size() > 1) compounds.push_back(source_set);
    if (sink_set.size() > 1) compounds.push_back(sink_set);
    auto [cg, map] = contract(g, compounds);
    int s = map.to_contracted[source_set.first()];
    int t = map.to_contracted[sink_set.first()];
    FlowNetwork net = build_network(cg);
    Cost value = net.run(s, t);
    return {value, map.expand(net.residual_from(s)), map.expand(net.residual_to(t))};
}

}  // namespace

FlowResult max_flow(const Graph& g, const VertexSet& source_set, const VertexSet& sink_set) {
    auto r = flow_between_sets(g, source_set, sink_set);
    return {r.value, std::move(r.source_side), std::move(r.sink_side)};
}

CommunityCutResult community_cut(const Graph& g, const VertexSet& source_set,
                                 const VertexSet& sink_set) {
    auto r = flow_between_sets(g, source_set, sink_set);
    VertexSet rest = VertexSet::full(g.vertex_count()) - r.source_side - r.sink_side;
    return {std::move(r.source_side), std::move(r.sink_side), std::move(rest), r.value};
}

CommunityCutResult community_cut(const Graph& g, int s, const VertexSet& sink_set) {
    return community_cut(g, VertexSet::singleton(g.vertex_count(), s), sink_set);
}

}  // namespace sc
