#include "sc/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace sc {

using nlohmann::json;

namespace {

json labels_of(const Graph& g, const VertexSet& set) {
    json arr = json::array();
    for (int v : set.members()) arr.push_back(g.label(v));
    return arr;
}

json report_json(const RunReport& r) {
    json j;
    j["flows"] = r.flows;
    j["cutc_calls"] = r.cutc_calls;
    j["levels"] = r.levels;
    j["wall_ms"] = r.wall_ms;
    return j;
}

const char* kind_name(ClusterKind k) {
    switch (k) {
        case ClusterKind::given_sc: return "given_sc";
        case ClusterKind::derived_sc: return "derived_sc";
        case ClusterKind::overlay_intersection: return "overlay_intersection";
    }
    return "?";
}

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string hierarchy_to_json(const Graph& g, const Hierarchy& h, const std::string& mode,
                              const RunReport& report) {
    json j;
    j["format_version"] = 1;
    j["type"] = "hierarchy";
    j["mode"] = mode;
    json levels = json::array();
    for (const auto& lvl : h.levels) {
        json level;
        level["alpha"] = lvl.alpha_produced.str();
        json clusters = json::array();
        for (const auto& c : lvl.clustering.clusters()) clusters.push_back(labels_of(g, c.members));
        level["clusters"] = clusters;
        levels.push_back(level);
    }
    j["levels"] = levels;
    json bps = json::array();
    for (const auto& bp : h.breakpoints) {
        if (bp) bps.push_back(bp->str());
        else bps.push_back(nullptr);
    }
    j["breakpoints"] = bps;
    j["report"] = report_json(report);
    return j.dump(2) + "\n";
}

std::string tree_to_json(const CommunityCutTree& tree, const RunReport& report) {
    const Graph& g = tree.graph();
    json j;
    j["format_version"] = 1;
    j["type"] = "sc_tree";
    j["n"] = g.vertex_count();
    json labels = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    j["labels"] = labels;
    json gedges = json::array();
    for (const auto& e : g.edges()) {
        json je;
        je["u"] = g.label(e.u);
        je["v"] = g.label(e.v);
        je["cost"] = e.cost.str();
        gedges.push_back(je);
    }
    j["graph_edges"] = gedges;
    json roots = json::array();
    for (int r : tree.roots()) roots.push_back(g.label(r));
    j["roots"] = roots;
    json tedges = json::array();
    for (const auto& e : tree.edges()) {
        json je;
        je["tail"] = g.label(e.tail);
        je["head"] = g.label(e.head);
        je["cost"] = e.cost.str();
        je["sc"] = labels_of(g, e.sc);
        je["opposite"] = labels_of(g, e.opposite);
        tedges.push_back(je);
    }
    j["edges"] = tedges;
    j["flow_count"] = tree.flow_count();
    j["report"] = report_json(report);
    return j.dump(2) + "\n";
}

LoadedTree tree_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("type") || j["type"] != "sc_tree")
        throw std::runtime_error("tree_from_json: not an sc_tree document");
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
    int n = static_cast<int>(labels.size());
    std::vector<GraphEdge> gedges;
    std::unordered_map<std::string, int> id_of;
    for (int v = 0; v < n; ++v) id_of[labels[v]] = v;
    auto vertex = [&](const std::string& lbl) {
        auto it = id_of.find(lbl);
        if (it == id_of.end()) throw std::runtime_error("tree_from_json: unknown label " + lbl);
        return it->second;
    };
    for (const auto& je : j["graph_edges"])
        gedges.push_back({vertex(je["u"]), vertex(je["v"]), Cost::parse(je["cost"])});
    auto graph = std::make_unique<Graph>(Graph::from_edges(n, std::move(gedges), labels));

    std::vector<TreeEdge> tedges;
    for (const auto& je : j["edges"]) {
        TreeEdge e{vertex(je["head"]), vertex(je["tail"]), Cost::parse(je["cost"]), VertexSet(n),
                   VertexSet(n), true};
        for (const auto& lbl : je["sc"]) e.sc.insert(vertex(lbl));
        for (const auto& lbl : je["opposite"]) e.opposite.insert(vertex(lbl));
        tedges.push_back(std::move(e));
    }
    long flow_count = j.value("flow_count", 0L);
    LoadedTree lt{std::move(graph), CommunityCutTree()};
    lt.tree = CommunityCutTree::from_parts(*lt.graph, std::move(tedges), flow_count);
    return lt;
}

std::string clustering_to_json(const Graph& g, const SCClustering& c, const RunReport& report) {
    json j;
    j["format_version"] = 1;
    j["type"] = "sc_clustering";
    json anchors = json::array();
    for (const auto& a : c.anchors) anchors.push_back(labels_of(g, a));
    j["anchors"] = anchors;
    json clusters = json::array();
    for (const auto& cl : c.clusters) {
        json jc;
        jc["members"] = labels_of(g, cl.members);
        jc["kind"] = kind_name(cl.kind);
        if (cl.source >= 0) jc["source"] = g.label(cl.source);
        else jc["source"] = nullptr;
        clusters.push_back(jc);
    }
    j["clusters"] = clusters;
    j["report"] = report_json(report);
    return j.dump(2) + "\n";
}

std::string tree_to_dot(const CommunityCutTree& tree) {
    const Graph& g = tree.graph();
    std::ostringstream out;
    out << "digraph sc_tree {\n";
    for (int r : tree.roots())
        out << "  " << quote_dot(g.label(r)) << " [shape=box];\n";
    for (const auto& e : tree.edges()) {
        out << "  " << quote_dot(g.label(e.tail)) << " -> " << quote_dot(g.label(e.head))
            << " [label=" << quote_dot(e.cost.str()) << "];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

const char* kPalette[] = {"lightblue", "lightyellow", "lightpink",  "lightgreen",
                          "orange",    "cyan",        "plum",       "khaki",
                          "salmon",    "palegreen",   "lightcoral", "wheat"};

std::string color_for(int i) { return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

}  // namespace

std::string clustering_to_dot(const Graph& g, const SCClustering& c) {
    std::ostringstream out;
    out << "graph clustering {\n  node [style=filled];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << quote_dot(g.label(v)) << " [fillcolor=" << color_for(c.cluster_of[v])
            << "];\n";
    for (const auto& e : g.edges())
        out << "  " << quote_dot(g.label(e.u)) << " -- " << quote_dot(g.label(e.v)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string level_to_dot(const Graph& g, const Clustering& c) {
    std::ostringstream out;
    out << "graph level {\n  node [style=filled];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << quote_dot(g.label(v)) << " [fillcolor=" << color_for(c.cluster_of(v))
            << "];\n";
    for (const auto& e : g.edges())
        out << "  " << quote_dot(g.label(e.u)) << " -- " << quote_dot(g.label(e.v)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace sc
