#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "phcurv/curvature.hpp"
#include "phcurv/geometric.hpp"
#include "phcurv/graph.hpp"

namespace phcurv::io {

/// Unreadable file or malformed input; the CLI maps it to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Text format: first non-comment line "n m", then m lines "u v". '#' starts a comment.
Graph parse_graph_text(std::istream& in);
std::string graph_to_text(const Graph& g);

/// JSON format: {"n": 5, "edges": [[0, 1], [1, 2]]}.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

struct LoadedGraph {
    Graph graph;
    /// Registry name or file path, echoed in reports.
    std::string source;
};

/// Registry names (see named_graph) win over files; *.json files are read as
/// JSON, anything else as the text format.
LoadedGraph load_graph(const std::string& name_or_path);

/// {"values": [3.0, 1.5, ...]}, one value per vertex.
Coloring parse_coloring_json(const std::string& text, std::size_t vertex_count);

/// {"arcs": [[u, v], ...]} with u -> v; must orient every edge of g exactly once.
Orientation parse_orientation_json(const std::string& text, const Graph& g);

/// {"type": "uniform-order"} or
/// {"type": "finite-support", "atoms": [{"values": [...], "weight": "1/2"}, ...]}.
/// Weights are exact rationals given as strings or integers.
ColoringMeasure parse_measure_json(const std::string& text, std::size_t vertex_count);

/// Shape specs: circle:N[:radius], sphere:RINGSxMERIDIANS, torus:NMAJORxNMINOR[:R:r], lemniscate:N.
geometric::PointCloud sample_shape(const std::string& spec);

geometric::PointCloud load_point_cloud(const std::string& path);

} // namespace phcurv::io
