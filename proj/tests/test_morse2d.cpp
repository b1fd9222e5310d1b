#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "phcurv/morse2d.hpp"
#include "phcurv/registry.hpp"

namespace phcurv {
namespace {

using morse2d::Kind;

std::vector<std::size_t> ranks(const Coloring& c)
{
    const std::vector<Vertex> order = c.order();
    std::vector<std::size_t> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = r;
    return rank;
}

/// Replaces edge {a, b} by {c, d} where c, d are the two common neighbours.
/// Returns nullopt if the flip is not admissible.
std::optional<Graph> flip(const Graph& g, const Edge& e)
{
    const auto [a, b] = e;
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(a))
        if (g.adjacent(w, b))
            common.push_back(w);
    if (common.size() != 2 || g.adjacent(common[0], common[1]) || g.degree(a) <= 4 || g.degree(b) <= 4)
        return std::nullopt;
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e)
            edges.push_back(f);
    edges.emplace_back(common[0], common[1]);
    return Graph::from_edges(g.vertex_count(), edges);
}

TEST(TwoGraph, Recognition)
{
    EXPECT_TRUE(morse2d::is_two_graph(icosahedron_graph()).ok);
    EXPECT_TRUE(morse2d::is_two_graph(octahedron_graph()).ok);
    EXPECT_TRUE(morse2d::is_two_graph(testing::torus_triangulation(4, 5)).ok);
    EXPECT_TRUE(morse2d::is_two_graph(testing::bipyramid(7)).ok);

    const morse2d::TwoGraphCheck k4 = morse2d::is_two_graph(complete_graph(4));
    EXPECT_FALSE(k4.ok);
    EXPECT_EQ(k4.first_failure, Vertex{0});
    EXPECT_FALSE(morse2d::is_two_graph(cycle_graph(6)).ok);
    EXPECT_FALSE(morse2d::is_two_graph(utility_graph()).ok);
}

TEST(Classify, SourceSinkAndRegular)
{
    const Graph g = octahedron_graph();
    // Height along the axis through the antipodal pair {4, 5}.
    const Orientation o = orient_by_coloring(g, Coloring({0, 1, 2, 3, -1, 5}));
    const morse2d::Classification c = morse2d::classify_all(g, o);
    EXPECT_EQ(c.vertices[4].kind, Kind::source);
    EXPECT_EQ(c.vertices[4].index, 1);
    EXPECT_EQ(c.vertices[5].kind, Kind::sink);
    EXPECT_EQ(c.vertices[5].index, 1);
    for (Vertex v = 0; v < 4; ++v) {
        EXPECT_EQ(c.vertices[v].kind, Kind::regular);
        EXPECT_EQ(c.vertices[v].incoming_components, 1U);
        EXPECT_EQ(c.vertices[v].index, 0);
    }
    EXPECT_EQ(c.sources, 1U);
    EXPECT_EQ(c.sinks, 1U);
    EXPECT_EQ(c.regular, 4U);
    EXPECT_EQ(c.saddles, 0U);
    EXPECT_EQ(c.index_sum, 2);
    EXPECT_EQ(c.chi, 2);
    EXPECT_TRUE(c.passed);
}

TEST(Classify, IcosahedronMorseSaddles)
{
    const Graph g = icosahedron_graph();
    const Orientation o = orient_by_coloring(g, Coloring(testing::kIcosahedronFlow));
    const morse2d::Classification c = morse2d::classify_all(g, o);
    EXPECT_EQ(c.sources + c.sinks, 4U);
    EXPECT_EQ(c.saddles, 2U);
    for (Vertex v : {3U, 5U}) {
        EXPECT_EQ(c.vertices[v].kind, Kind::saddle);
        EXPECT_EQ(c.vertices[v].incoming_components, 2U);
        EXPECT_EQ(c.vertices[v].index, -1);
    }
    for (Vertex v = 0; v < 12; ++v)
        EXPECT_EQ(c.vertices[v].index, testing::kIcosahedronFlowIndices[v]);
    EXPECT_TRUE(c.passed);
}

TEST(Classify, MonkeySaddle)
{
    // North apex at height 0 over a ring alternating 1, -1: three lower arcs.
    const Graph g = testing::bipyramid(6);
    const Coloring height({1, -1, 1, -1, 1, -1, 0, 5});
    const Orientation o = orient_by_coloring(g, height);
    const morse2d::VertexClass north = morse2d::classify_vertex(g, o, 6);
    EXPECT_EQ(north.kind, Kind::saddle);
    EXPECT_EQ(north.incoming_components, 3U);
    EXPECT_EQ(north.index, -2);
    const morse2d::Classification c = morse2d::classify_all(g, o);
    EXPECT_EQ(c.sources, 3U);
    EXPECT_EQ(c.sinks, 1U);
    EXPECT_EQ(c.saddles, 1U);
    EXPECT_EQ(c.index_sum, 2);
    EXPECT_TRUE(c.passed);
}

TEST(Classify, Errors)
{
    const Graph k4 = complete_graph(4);
    EXPECT_THROW(morse2d::classify_vertex(k4, orient_by_coloring(k4, Coloring::identity(4)), 0), std::invalid_argument);
    EXPECT_THROW(morse2d::classify_all(k4, orient_by_coloring(k4, Coloring::identity(4))), std::invalid_argument);

    const Graph g = octahedron_graph();
    // 0 -> 2 -> 4 -> 0 is cyclic; every other edge follows the ids.
    const std::vector<Edge> arcs = {{0, 2}, {2, 4}, {4, 0}, {0, 3}, {0, 5}, {1, 2},
                                    {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5}};
    const Orientation cyclic = Orientation::from_arcs(g, arcs);
    EXPECT_FALSE(cyclic.irrotational());
    EXPECT_THROW(morse2d::classify_vertex(g, cyclic, 1), NotIrrotational);
    EXPECT_EQ(morse2d::to_string(Kind::saddle), "saddle");
}

TEST(Classify, RandomTwoGraphs)
{
    std::mt19937_64 rng(2024);
    // Spheres have chi 2, tori chi 0; flips do not change the surface.
    std::vector<std::pair<Graph, int>> shapes = {{octahedron_graph(), 2}, {icosahedron_graph(), 2}};
    for (std::size_t k = 4; k <= 9; ++k)
        shapes.emplace_back(testing::bipyramid(k), 2);
    for (std::size_t m = 4; m <= 6; ++m)
        shapes.emplace_back(testing::torus_triangulation(m, m + 1), 0);
    // Random admissible edge flips keep the surface; kept only if still a 2-graph.
    for (int i = 0; i < 20; ++i) {
        auto [g, chi] = shapes[rng() % shapes.size()];
        for (int step = 0; step < 10; ++step) {
            const auto edges = g.edges();
            if (auto h = flip(g, edges[rng() % edges.size()]); h && morse2d::is_two_graph(*h).ok)
                g = std::move(*h);
        }
        shapes.emplace_back(std::move(g), chi);
    }

    for (int trial = 0; trial < 500; ++trial) {
        const auto& [g, chi] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
        ASSERT_TRUE(morse2d::is_two_graph(g).ok);
        const Coloring coloring(testing::random_injective_values(g.vertex_count(), rng));
        const morse2d::Classification c = morse2d::classify_all(g, orient_by_coloring(g, coloring));
        const auto rank = ranks(coloring);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const morse2d::VertexClass& vc = c.vertices[v];
            EXPECT_EQ(vc.index, testing::brute_force_index(g, rank, v));
            EXPECT_LE(vc.index, 1);
            if (vc.kind == Kind::saddle)
                EXPECT_EQ(vc.index, 1 - static_cast<std::int64_t>(vc.incoming_components));
        }
        EXPECT_TRUE(c.passed);
        EXPECT_EQ(c.chi, chi);
        EXPECT_EQ(c.sources + c.sinks + c.regular + c.saddles, g.vertex_count());
    }
}

} // namespace
} // namespace phcurv
