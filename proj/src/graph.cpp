#include "sc/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sc/cost.hpp"

namespace sc {

Cost Cost::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Cost::parse: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("Cost::parse: bad rational '" + text + "'");
        if (q.get_den() == 0) throw std::domain_error("Cost::parse: zero denominator in '" + text + "'");
        q.canonicalize();
        return Cost(q);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // exact decimal: digits after the dot become a power-of-ten denominator
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("Cost::parse: bad decimal '" + text + "'");
        mpz_class num(digits, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return Cost(q);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Cost::parse: bad number '" + text + "'");
    return Cost(q);
}

std::string Cost::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Graph Graph::from_edges(int n, std::vector<GraphEdge> edges, std::vector<std::string> labels) {
    if (n < 0) throw std::domain_error("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("Graph: label count does not match vertex count");
    g.labels_ = std::move(labels);
    for (int v = 0; v < n; ++v) g.label_to_id_.emplace(g.labels_[v], v);

    // merge duplicates by unordered pair, summing costs
    std::map<std::pair<int, int>, Cost> merged;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::domain_error("Graph: edge endpoint out of range");
        if (e.u == e.v) throw std::domain_error("Graph: self-loop at vertex " + g.labels_[e.u]);
        if (!e.cost.positive())
            throw std::domain_error("Graph: non-positive edge cost on {" + g.labels_[e.u] + "," +
                                    g.labels_[e.v] + "}");
        auto key = std::minmax(e.u, e.v);
        merged[{key.first, key.second}] += e.cost;
    }

    g.adj_.resize(n);
    g.wdeg_.assign(n, Cost(0));
    for (auto& [key, cost] : merged) {
        int idx = static_cast<int>(g.edges_.size());
        g.edges_.push_back({key.first, key.second, cost});
        g.adj_[key.first].emplace_back(key.second, idx);
        g.adj_[key.second].emplace_back(key.first, idx);
        g.wdeg_[key.first] += cost;
        g.wdeg_[key.second] += cost;
        g.total_cost_ += cost;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

Cost Graph::max_edge_cost() const {
    Cost m(0);
    for (const auto& e : edges_)
        if (e.cost > m) m = e.cost;
    return m;
}

int Graph::vertex_by_label(const std::string& label) const {
    auto it = label_to_id_.find(label);
    return it == label_to_id_.end() ? -1 : it->second;
}

Cost Graph::cut_cost(const VertexSet& side) const {
    if (side.empty() || side.size() == n_)
        throw std::domain_error("cut_cost: side must be a proper nonempty subset");
    Cost total(0);
    for (const auto& e : edges_)
        if (side.contains(e.u) != side.contains(e.v)) total += e.cost;
    return total;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        VertexSet comp(n_);
        stack.push_back(start);
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (auto [w, idx] : adj_[v]) {
                (void)idx;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexSet ContractionMap::expand(const VertexSet& contracted_side) const {
    VertexSet out(static_cast<int>(to_contracted.size()));
    for (int cid : contracted_side.members())
        for (int v : members[cid].members()) out.insert(v);
    return out;
}

std::pair<Graph, ContractionMap> contract(const Graph& g, const std::vector<VertexSet>& compounds) {
    int n = g.vertex_count();
    std::vector<int> compound_of(n, -1);
    for (std::size_t i = 0; i < compounds.size(); ++i) {
        for (int v : compounds[i].members()) {
            if (compound_of[v] != -1) throw std::domain_error("contract: overlapping compounds");
            compound_of[v] = static_cast<int>(i);
        }
    }

    ContractionMap map;
    map.to_contracted.assign(n, -1);
    std::vector<int> compound_id(compounds.size(), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (map.to_contracted[v] != -1) continue;
        int c = compound_of[v];
        if (c == -1) {
            map.to_contracted[v] = next;
            map.members.push_back(VertexSet::singleton(n, v));
            ++next;
        } else {
            compound_id[c] = next;
            for (int w : compounds[c].members()) map.to_contracted[w] = next;
            map.members.push_back(compounds[c]);
            ++next;
        }
    }

    std::vector<GraphEdge> edges;
    for (const auto& e : g.edges()) {
        int cu = map.to_contracted[e.u];
        int cv = map.to_contracted[e.v];
        if (cu == cv) continue;  // intra-compound edge drops out
        edges.push_back({cu, cv, e.cost});
    }
    std::vector<std::string> labels;
    labels.reserve(next);
    for (int c = 0; c < next; ++c) {
        const VertexSet& m = map.members[c];
        if (m.size() == 1) {
            labels.push_back(g.label(m.first()));
        } else {
            std::string composite = "[";
            bool sep = false;
            for (int v : m.members()) {
                if (sep) composite += "+";
                composite += g.label(v);
                sep = true;
            }
            composite += "]";
            labels.push_back(composite);
        }
    }
    return {Graph::from_edges(next, std::move(edges), std::move(labels)), std::move(map)};
}

}  // namespace sc
