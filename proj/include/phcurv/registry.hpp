#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phcurv/graph.hpp"

namespace phcurv {

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{a,b}; the left part is 0..a-1.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Antipodal pairs (0,1), (2,3), (4,5) are the non-edges.
Graph octahedron_graph();
/// Vertex 0 is the north pole, 1..5 the upper ring, 6..10 the lower ring,
/// 11 the south pole.
Graph icosahedron_graph();
/// K_{3,3}.
Graph utility_graph();

/// Resolves "cycle:k", "path:k", "complete:k", "octahedron", "icosahedron",
/// "utility". Returns nullopt for names outside the registry; throws
/// std::invalid_argument for a known family with a bad parameter.
std::optional<Graph> named_graph(std::string_view name);

std::vector<std::string> registry_names();

} // namespace phcurv
