#pragma once

#include <memory>
#include <string>

#include "sc/cut_clustering.hpp"
#include "sc/sc_queries.hpp"
#include "sc/sc_tree.hpp"

namespace sc {

/// Counters attached to every CLI output. Wall time is excluded from the
/// byte-identical determinism contract; everything else is deterministic.
struct RunReport {
    long flows = 0;
    long cutc_calls = 0;
    int levels = 0;
    long wall_ms = 0;
};

std::string hierarchy_to_json(const Graph& g, const Hierarchy& h, const std::string& mode,
                              const RunReport& report);
std::string tree_to_json(const CommunityCutTree& tree, const RunReport& report);
std::string clustering_to_json(const Graph& g, const SCClustering& c, const RunReport& report);

/// A tree deserialized together with the graph it was built from.
struct LoadedTree {
    std::unique_ptr<Graph> graph;
    CommunityCutTree tree;
};
LoadedTree tree_from_json(const std::string& text);

std::string tree_to_dot(const CommunityCutTree& tree);
std::string clustering_to_dot(const Graph& g, const SCClustering& c);
std::string level_to_dot(const Graph& g, const Clustering& c);

}  // namespace sc
