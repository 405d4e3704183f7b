#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "sc/communities.hpp"
#include "sc/cut_clustering.hpp"
#include "sc/graph_io.hpp"
#include "sc/maxflow.hpp"
#include "sc/sc_queries.hpp"
#include "sc/sc_tree.hpp"
#include "sc/serialize.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Anchor sets arrive as comma-separated label lists or @file with one label
// per line and '#' comments.
std::vector<std::string> parse_label_list(const std::string& spec) {
    std::vector<std::string> labels;
    if (!spec.empty() && spec[0] == '@') {
        std::istringstream in(read_file(spec.substr(1)));
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string token;
            while (ls >> token) labels.push_back(token);
        }
    } else {
        std::string token;
        std::istringstream in(spec);
        while (std::getline(in, token, ','))
            if (!token.empty()) labels.push_back(token);
    }
    if (labels.empty()) throw std::runtime_error("empty vertex set: " + spec);
    return labels;
}

sc::VertexSet resolve_set(const sc::Graph& g, const std::string& spec) {
    sc::VertexSet set(g.vertex_count());
    for (const auto& lbl : parse_label_list(spec)) {
        int v = g.vertex_by_label(lbl);
        if (v < 0) throw std::runtime_error("unknown vertex label: " + lbl);
        set.insert(v);
    }
    return set;
}

int resolve_vertex(const sc::Graph& g, const std::string& label) {
    int v = g.vertex_by_label(label);
    if (v < 0) throw std::runtime_error("unknown vertex label: " + label);
    return v;
}

// Query inputs are either a serialized tree (JSON) or a graph file.
struct TreeInput {
    std::unique_ptr<sc::Graph> owned_graph;
    std::optional<sc::CommunityCutTree> built;
    sc::LoadedTree loaded;
    bool is_loaded = false;

    const sc::CommunityCutTree& tree() const { return is_loaded ? loaded.tree : *built; }
};

TreeInput open_tree_input(const std::string& path) {
    TreeInput in;
    std::string text = read_file(path);
    auto non_space = text.find_first_not_of(" \t\r\n");
    if (non_space != std::string::npos && text[non_space] == '{') {
        in.loaded = sc::tree_from_json(text);
        in.is_loaded = true;
        return in;
    }
    in.owned_graph = std::make_unique<sc::Graph>(sc::load_graph_file(path));
    in.built = sc::build_sc_tree(*in.owned_graph);
    return in;
}

struct HierarchyArgs {
    std::string input;
    std::string mode = "parametric";
    std::string step;
    std::string out;
    std::string dot_prefix;
    bool best_modularity = false;
};

int cmd_hierarchy(const HierarchyArgs& a) {
    auto start = Clock::now();
    long flows0 = sc::FlowCounter::value();
    sc::Graph g = sc::load_graph_file(a.input);

    sc::Hierarchy h;
    if (a.mode == "parametric") {
        h = sc::complete_hierarchy(g);
    } else if (a.mode == "binary") {
        sc::Cost step = a.step.empty()
                            ? sc::Cost(1) / sc::Cost(static_cast<long>(g.vertex_count()) *
                                                     g.vertex_count())
                            : sc::Cost::parse(a.step);
        h = sc::binary_search_hierarchy(g, step);
    } else {
        throw std::runtime_error("unknown mode: " + a.mode);
    }

    sc::RunReport report{sc::FlowCounter::value() - flows0, h.cutc_calls, h.level_count(),
                         ms_since(start)};
    std::cout << "levels " << h.level_count() << "\n";
    std::cout << "cutc_calls " << h.cutc_calls << "\n";
    std::cout << "flows " << report.flows << "\n";
    std::ostringstream bps;
    for (const auto& bp : h.breakpoints) bps << " " << (bp ? bp->str() : "?");
    std::cout << "breakpoints" << bps.str() << "\n";

    if (a.best_modularity) {
        int best = 0;
        sc::Cost best_q = sc::modularity(g, h.levels[0].clustering);
        for (int i = 1; i < h.level_count(); ++i) {
            sc::Cost q = sc::modularity(g, h.levels[i].clustering);
            if (q > best_q) { best_q = q; best = i; }
        }
        std::cout << "best_modularity_level " << best << "\n";
        std::cout << "best_modularity " << best_q.str() << "\n";
    }

    if (!a.out.empty()) write_file(a.out, sc::hierarchy_to_json(g, h, a.mode, report));
    if (!a.dot_prefix.empty())
        for (int i = 0; i < h.level_count(); ++i)
            write_file(a.dot_prefix + std::to_string(i) + ".dot",
                       sc::level_to_dot(g, h.levels[i].clustering));
    return 0;
}

struct TreeArgs {
    std::string input;
    std::string out;
    std::string dot;
    bool strict = false;
};

int cmd_tree(const TreeArgs& a) {
    auto start = Clock::now();
    long flows0 = sc::FlowCounter::value();
    sc::Graph g = sc::load_graph_file(a.input);
    sc::CommunityCutTree tree = sc::build_sc_tree(g, a.strict);
    sc::RunReport report{sc::FlowCounter::value() - flows0, 0, 0, ms_since(start)};
    std::cout << "flow_count " << tree.flow_count() << "\n";
    std::cout << "root " << g.label(tree.root()) << "\n";
    if (!a.out.empty()) write_file(a.out, sc::tree_to_json(tree, report));
    if (!a.dot.empty()) write_file(a.dot, sc::tree_to_dot(tree));
    return 0;
}

struct QueryArgs {
    std::string input;
    std::vector<std::string> anchors;
    std::vector<std::string> sources;
    bool trust = false;
    std::string out;
    std::string dot;
};

int cmd_query(const QueryArgs& a, bool overlay) {
    auto start = Clock::now();
    long flows0 = sc::FlowCounter::value();
    TreeInput in = open_tree_input(a.input);
    const sc::CommunityCutTree& tree = in.tree();
    const sc::Graph& g = tree.graph();

    if (a.anchors.size() != a.sources.size())
        throw std::runtime_error("each --anchor needs a matching --source");
    if (a.anchors.empty()) throw std::runtime_error("no anchor given");
    if (!overlay && a.anchors.size() != 1)
        throw std::runtime_error("max-clustering takes exactly one anchor");

    std::vector<sc::AnchorSC> anchors;
    for (std::size_t i = 0; i < a.anchors.size(); ++i)
        anchors.push_back({resolve_set(g, a.anchors[i]), resolve_vertex(g, a.sources[i])});

    sc::SCClustering result = overlay ? sc::overlay_clustering(tree, anchors, a.trust)
                                      : sc::maximal_sc_clustering(tree, anchors[0], a.trust);

    sc::RunReport report{sc::FlowCounter::value() - flows0, 0, 0, ms_since(start)};
    std::cout << "clusters " << result.cluster_count() << "\n";
    std::string json = sc::clustering_to_json(g, result, report);
    if (!a.out.empty()) write_file(a.out, json);
    else std::cout << json;
    if (!a.dot.empty()) write_file(a.dot, sc::clustering_to_dot(g, result));
    return 0;
}

struct ValidateArgs {
    std::string input;
    std::string set;
    std::string type;
    std::string source;
    int guard = 20;
};

int cmd_validate(const ValidateArgs& a) {
    sc::Graph g = sc::load_graph_file(a.input);
    sc::VertexSet set = resolve_set(g, a.set);
    bool ok;
    if (a.type == "wc") {
        ok = sc::is_web_community(g, set);
    } else if (a.type == "es") {
        ok = sc::is_extreme_set(g, set, a.guard);
    } else if (a.type == "sc") {
        if (a.source.empty()) throw std::runtime_error("--type sc requires --source");
        ok = sc::is_source_community(g, set, resolve_vertex(g, a.source));
    } else {
        throw std::runtime_error("unknown type: " + a.type + " (expected wc|es|sc)");
    }
    std::cout << (ok ? "true" : "false") << "\n";
    return 0;
}

struct BenchArgs {
    std::vector<std::string> inputs;
    std::string step;
    std::string out;
};

int cmd_bench(const BenchArgs& a) {
    std::ostringstream csv;
    csv << "instance,n,m,h,cutc_calls_param,cutc_calls_binary,time_param,time_binary,factor\n";
    for (const auto& path : a.inputs) {
        sc::Graph g = sc::load_graph_file(path);
        auto t0 = Clock::now();
        sc::Hierarchy param = sc::complete_hierarchy(g);
        double time_param = ms_since(t0) / 1000.0;

        sc::Cost step = a.step.empty()
                            ? sc::Cost(1) / sc::Cost(static_cast<long>(g.vertex_count()) *
                                                     g.vertex_count())
                            : sc::Cost::parse(a.step);
        auto t1 = Clock::now();
        sc::Hierarchy binary = sc::binary_search_hierarchy(g, step);
        double time_binary = ms_since(t1) / 1000.0;

        std::string name = path;
        auto slash = name.find_last_of('/');
        if (slash != std::string::npos) name = name.substr(slash + 1);
        csv << name << "," << g.vertex_count() << "," << g.edge_count() << ","
            << param.level_count() << "," << param.cutc_calls << "," << binary.cutc_calls << ","
            << time_param << "," << time_binary << ","
            << (time_param > 0 ? time_binary / time_param : 0.0) << "\n";
    }
    if (!a.out.empty()) write_file(a.out, csv.str());
    else std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"source-community detection via max-flow: cut clustering "
                 "hierarchies, community-cut trees and SC clustering queries"};
    app.require_subcommand(1);

    HierarchyArgs ha;
    auto* hier = app.add_subcommand("hierarchy", "complete or binary-search cut clustering hierarchy");
    hier->add_option("input", ha.input, "graph file (.gml, .graph or edge list)")->required();
    hier->add_option("--mode", ha.mode, "parametric|binary (default parametric)");
    hier->add_option("--step", ha.step, "binary-search step as a rational (default 1/n^2)");
    hier->add_option("--out", ha.out, "write hierarchy JSON here");
    hier->add_option("--dot", ha.dot_prefix, "write per-level DOT files with this prefix");
    hier->add_flag("--best-modularity", ha.best_modularity, "report the best-modularity level");

    TreeArgs ta;
    auto* tr = app.add_subcommand("tree", "build the community-cut tree");
    tr->add_option("input", ta.input, "graph file")->required();
    tr->add_option("--out", ta.out, "write tree JSON here");
    tr->add_option("--dot", ta.dot, "write tree DOT here");
    tr->add_flag("--strict", ta.strict, "reject disconnected graphs");

    QueryArgs qa;
    auto* query = app.add_subcommand("query", "clustering queries on a tree");
    query->require_subcommand(1);
    auto* maxc = query->add_subcommand("max-clustering", "maximal SC clustering for one SC");
    auto* over = query->add_subcommand("overlay", "overlay clustering for disjoint SCs");
    for (auto* sub : {maxc, over}) {
        sub->add_option("input", qa.input, "tree JSON or graph file")->required();
        sub->add_option("--anchor,--anchors", qa.anchors, "anchor set: label,label,... or @file");
        sub->add_option("--source,--sources", qa.sources, "source vertex of the matching anchor");
        sub->add_flag("--trust", qa.trust, "skip the SC validation flow per anchor");
        sub->add_option("--out", qa.out, "write clustering JSON here (default stdout)");
        sub->add_option("--dot", qa.dot, "write colored DOT here");
    }

    ValidateArgs va;
    auto* val = app.add_subcommand("validate", "test a vertex set against the community predicates");
    val->add_option("input", va.input, "graph file")->required();
    val->add_option("--set", va.set, "vertex set: label,label,... or @file")->required();
    val->add_option("--type", va.type, "wc|es|sc")->required();
    val->add_option("--source", va.source, "source vertex (type sc)");
    val->add_option("--guard", va.guard, "subset enumeration guard (default 20)");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "parametric vs binary-search comparison (CSV)");
    bench->add_option("inputs", ba.inputs, "graph files")->required();
    bench->add_option("--step", ba.step, "binary-search step (default 1/n^2)");
    bench->add_option("--out", ba.out, "write CSV here (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hier->parsed()) return cmd_hierarchy(ha);
        if (tr->parsed()) return cmd_tree(ta);
        if (query->parsed()) return cmd_query(qa, over->parsed());
        if (val->parsed()) return cmd_validate(va);
        if (bench->parsed()) return cmd_bench(ba);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
