#pragma once

#include <stdexcept>
#include <string>

#include "sc/graph.hpp"

namespace sc {

enum class GraphFormat { edge_list, gml_subset };

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

/// Edge list: whitespace-separated "u v w" with '#' comments, w optional
/// (default 1). GML subset: node [ id ... label ... ] and
/// edge [ source ... target ... value ... ] blocks only.
Graph parse_graph(const std::string& text, GraphFormat format);

/// METIS / DIMACS-10 .graph adjacency format ('%' comments, 1-indexed
/// neighbor lists, optional edge weights via the fmt field).
Graph parse_metis(const std::string& text);

/// Picks a parser from the file name suffix: .gml, .graph (METIS),
/// anything else is read as an edge list.
Graph load_graph_file(const std::string& path);

}  // namespace sc
