#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "phcurv/orientation.hpp"

namespace phcurv::morse2d {

enum class Kind { source, sink, regular, saddle };

std::string_view to_string(Kind k);

/// Critical-point type of a vertex of a 2-graph under an orientation.
/// `incoming_components` is the number of connected components of S^-(v)
/// inside the circle S(v).
struct VertexClass {
    Kind kind = Kind::regular;
    std::size_t incoming_components = 0;
    std::int64_t index = 0;
};

struct TwoGraphCheck {
    bool ok = true;
    /// Smallest vertex whose unit sphere is not a cycle of length >= 4.
    std::optional<Vertex> first_failure;
};

/// Every unit sphere must be connected, 2-regular and have at least 4 vertices.
TwoGraphCheck is_two_graph(const Graph& g);

/// Classifies v by counting the arcs of S^-(v) on the circle S(v) and checks
/// the result against ph_index. Throws std::invalid_argument when the unit
/// sphere of v is not a cycle, NotIrrotational for a cyclic orientation, and
/// std::logic_error if the two index routes disagree.
VertexClass classify_vertex(const Graph& g, const Orientation& o, Vertex v);

struct Classification {
    std::vector<VertexClass> vertices;
    std::size_t sources = 0;
    std::size_t sinks = 0;
    std::size_t regular = 0;
    std::size_t saddles = 0;
    std::int64_t index_sum = 0;
    BigInt chi;
    bool passed = false;
};

/// Throws std::invalid_argument if g is not a 2-graph.
Classification classify_all(const Graph& g, const Orientation& o);

} // namespace phcurv::morse2d
