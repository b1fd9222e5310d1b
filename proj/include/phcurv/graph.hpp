#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "phcurv/bitset.hpp"

namespace phcurv {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: as one bitset row per vertex (constant-time
/// membership, word-parallel neighbourhood intersection) and as sorted
/// neighbour lists. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Deduplicates edges and symmetrizes. Throws std::invalid_argument for a
    /// self-loop or an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    std::size_t words_per_row() const { return words_; }

    bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }
    std::span<const bits::Word> row(Vertex v) const { return {bits_.data() + static_cast<std::size_t>(v) * words_, words_}; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<bits::Word> bits_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph together with the map from its vertex ids back to the parent's.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> parent_ids;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Induced subgraph on `vertices` (sorted, deduplicated first). Vertex i of
/// the result is the i-th smallest selected parent vertex.
Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);

/// Throws std::out_of_range when v is not a vertex of g.
void check_vertex(const Graph& g, Vertex v);

/// Vertex ordering by repeated removal of a minimum-degree vertex. Returns the
/// order (position -> vertex) and the degeneracy.
std::pair<std::vector<Vertex>, std::size_t> degeneracy_order(const Graph& g);

/// Relabels g so that vertex order[i] becomes i.
Graph relabel(const Graph& g, std::span<const Vertex> order);

} // namespace phcurv
