#include "sc/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace sc {

namespace {

bool blank_or_comment(const std::string& line, char comment) {
    for (char c : line) {
        if (c == comment) return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::pair<std::string, std::string>, Cost>> raw;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> id_of;

    auto intern = [&](const std::string& name) {
        auto it = id_of.find(name);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(labels.size());
        id_of.emplace(name, id);
        labels.push_back(name);
        return id;
    };

    bool any = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (blank_or_comment(line, '#')) continue;
        std::istringstream ls(line);
        std::string u, v, w;
        if (!(ls >> u >> v)) throw ParseError("expected 'u v [w]'", lineno);
        Cost cost(1);
        if (ls >> w) {
            try {
                cost = Cost::parse(w);
            } catch (const std::exception& e) {
                throw ParseError(std::string("bad weight: ") + e.what(), lineno);
            }
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens after 'u v w'", lineno);
        if (!cost.positive()) throw ParseError("non-positive edge weight", lineno);
        if (u == v) throw ParseError("self-loop", lineno);
        any = true;
        raw.push_back({{u, v}, cost});
    }
    if (!any) throw ParseError("no edges found", lineno == 0 ? 1 : lineno);

    std::vector<GraphEdge> edges;
    for (auto& [pair, cost] : raw) {
        int a = intern(pair.first);
        int b = intern(pair.second);
        edges.push_back({a, b, cost});
    }
    int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

// Minimal GML tokenizer: words, numbers and quoted strings, brackets.
struct GmlTokens {
    std::vector<std::string> toks;
    std::vector<int> lines;
    std::size_t pos = 0;

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const { return toks[pos]; }
    std::string next() { return toks[pos++]; }
    int line() const { return lines[pos < lines.size() ? pos : lines.size() - 1]; }
};

GmlTokens tokenize_gml(const std::string& text) {
    GmlTokens t;
    int lineno = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') { ++lineno; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '[' || c == ']') {
            t.toks.push_back(std::string(1, c));
            t.lines.push_back(lineno);
            ++i;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"') {
                if (text[j] == '\n') ++lineno;
                ++j;
            }
            if (j >= text.size()) throw ParseError("unterminated string", lineno);
            t.toks.push_back(text.substr(i + 1, j - i - 1));
            t.lines.push_back(lineno);
            i = j + 1;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
               text[j] != '[' && text[j] != ']')
            ++j;
        t.toks.push_back(text.substr(i, j - i));
        t.lines.push_back(lineno);
        i = j;
    }
    return t;
}

// skips a [ ... ] block (already past the '[')
void skip_gml_block(GmlTokens& t) {
    int depth = 1;
    while (!t.done() && depth > 0) {
        std::string tok = t.next();
        if (tok == "[") ++depth;
        if (tok == "]") --depth;
    }
    if (depth != 0) throw ParseError("unbalanced brackets", t.line());
}

Graph parse_gml(const std::string& text) {
    GmlTokens t = tokenize_gml(text);

    struct Node { long id; std::string label; bool has_label; };
    std::vector<Node> nodes;
    struct RawEdge { long source, target; Cost value; int line; };
    std::vector<RawEdge> redges;

    while (!t.done()) {
        std::string tok = t.next();
        if (tok == "node") {
            if (t.done() || t.next() != "[") throw ParseError("expected [ after node", t.line());
            Node n{0, "", false};
            bool has_id = false;
            int depth = 1;
            while (!t.done() && depth > 0) {
                std::string key = t.next();
                if (key == "]") { --depth; continue; }
                if (key == "[") { ++depth; skip_gml_block(t); --depth; continue; }
                if (t.done()) throw ParseError("dangling key in node", t.line());
                std::string val = t.next();
                if (val == "[") { skip_gml_block(t); continue; }
                if (key == "id") { n.id = std::stol(val); has_id = true; }
                else if (key == "label") { n.label = val; n.has_label = true; }
            }
            if (!has_id) throw ParseError("node without id", t.line());
            nodes.push_back(std::move(n));
        } else if (tok == "edge") {
            if (t.done() || t.next() != "[") throw ParseError("expected [ after edge", t.line());
            RawEdge e{-1, -1, Cost(1), t.line()};
            bool has_s = false, has_t = false;
            int depth = 1;
            while (!t.done() && depth > 0) {
                std::string key = t.next();
                if (key == "]") { --depth; continue; }
                if (key == "[") { ++depth; skip_gml_block(t); --depth; continue; }
                if (t.done()) throw ParseError("dangling key in edge", t.line());
                std::string val = t.next();
                if (val == "[") { skip_gml_block(t); continue; }
                if (key == "source") { e.source = std::stol(val); has_s = true; }
                else if (key == "target") { e.target = std::stol(val); has_t = true; }
                else if (key == "value" || key == "weight") {
                    try {
                        e.value = Cost::parse(val);
                    } catch (const std::exception& ex) {
                        throw ParseError(std::string("bad edge value: ") + ex.what(), t.line());
                    }
                }
            }
            if (!has_s || !has_t) throw ParseError("edge without source/target", e.line);
            redges.push_back(std::move(e));
        }
        // every other token (graph, [, ], directed, ...) is ignored
    }

    if (nodes.empty()) throw ParseError("no node blocks found", 1);
    std::unordered_map<long, int> dense;
    std::vector<std::string> labels;
    for (const auto& n : nodes) {
        if (dense.count(n.id)) throw ParseError("duplicate node id " + std::to_string(n.id), 1);
        dense.emplace(n.id, static_cast<int>(labels.size()));
        labels.push_back(n.has_label ? n.label : std::to_string(n.id));
    }
    std::vector<GraphEdge> edges;
    for (const auto& e : redges) {
        auto si = dense.find(e.source);
        auto ti = dense.find(e.target);
        if (si == dense.end() || ti == dense.end())
            throw ParseError("edge references unknown node id", e.line);
        if (si->second == ti->second) throw ParseError("self-loop", e.line);
        if (!e.value.positive()) throw ParseError("non-positive edge value", e.line);
        edges.push_back({si->second, ti->second, e.value});
    }
    int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (text.empty()) throw std::invalid_argument("parse_graph: empty input");
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::gml_subset: return parse_gml(text);
    }
    throw std::invalid_argument("parse_graph: unknown format");
}

Graph parse_metis(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::string fmt = "0";
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line, '%')) continue;
        std::istringstream hs(line);
        if (!(hs >> n >> m)) throw ParseError("bad METIS header", lineno);
        hs >> fmt;
        break;
    }
    if (n < 0) throw ParseError("missing METIS header", lineno);
    bool edge_weights = !fmt.empty() && fmt.back() == '1';
    bool vertex_weights = fmt.size() >= 2 && fmt[fmt.size() - 2] == '1';

    std::vector<GraphEdge> edges;
    long vertex = 0;
    while (vertex < n && std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line, '%')) continue;
        std::istringstream ls(line);
        long skip;
        if (vertex_weights) ls >> skip;
        long nbr;
        while (ls >> nbr) {
            if (nbr < 1 || nbr > n) throw ParseError("neighbor id out of range", lineno);
            Cost w(1);
            if (edge_weights) {
                long wl;
                if (!(ls >> wl)) throw ParseError("missing edge weight", lineno);
                w = Cost(wl);
            }
            int u = static_cast<int>(vertex);
            int v = static_cast<int>(nbr - 1);
            if (u == v) continue;               // tolerate stray self-loops
            if (u < v) edges.push_back({u, v, w});  // each edge is listed twice
        }
        ++vertex;
    }
    if (vertex != n) throw ParseError("fewer adjacency lines than vertices", lineno);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (long v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return Graph::from_edges(static_cast<int>(n), std::move(edges), std::move(labels));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".gml")) return parse_graph(text, GraphFormat::gml_subset);
    if (ends_with(".graph") || ends_with(".metis")) return parse_metis(text);
    return parse_graph(text, GraphFormat::edge_list);
}

}  // namespace sc
