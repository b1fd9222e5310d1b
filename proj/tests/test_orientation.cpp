#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "phcurv/orientation.hpp"
#include "phcurv/registry.hpp"

namespace phcurv {
namespace {

std::vector<std::size_t> ranks_of(const Coloring& c)
{
    const auto order = c.order();
    std::vector<std::size_t> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = r;
    return rank;
}

TEST(OrientByColoring, TriangleArcs)
{
    const Graph g = complete_graph(3);
    const Orientation o = orient_by_coloring(g, Coloring({0, 1, 2}));
    EXPECT_EQ(o.arcs(g), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(o.irrotational());
}

TEST(OrientByColoring, SquareExtrema)
{
    const Graph g = cycle_graph(4);
    const Orientation o = orient_by_coloring(g, Coloring({0, 3, 1, 2}));
    // Vertex 1 is above both neighbours, vertex 0 below both.
    EXPECT_EQ(o.in_degree(1), 2U);
    EXPECT_EQ(o.in_degree(0), 0U);
    EXPECT_EQ(ph_index(g, o, 1), -1);
    EXPECT_EQ(ph_index(g, o, 0), 1);
}

TEST(OrientByColoring, IdsGiveAcyclicOrientation)
{
    std::mt19937_64 rng(3);
    const Graph g = testing::random_graph(12, 0.6, rng);
    const Orientation o = orient_by_coloring(g, Coloring::identity(12));
    EXPECT_TRUE(o.irrotational());
    for (const auto& [tail, head] : o.arcs(g))
        EXPECT_LT(tail, head);
}

TEST(OrientByColoring, TiesBrokenByVertexId)
{
    const Graph g = complete_graph(3);
    const Orientation o = orient_by_coloring(g, Coloring({1.0, 1.0, 0.5}));
    EXPECT_TRUE(o.points_to(2, 0));
    EXPECT_TRUE(o.points_to(0, 1));
    EXPECT_TRUE(o.irrotational());
}

TEST(OrientByColoring, RejectsBadColorings)
{
    EXPECT_THROW(orient_by_coloring(complete_graph(3), Coloring({0, 1})), std::invalid_argument);
    EXPECT_THROW(Coloring({0.0, std::nan("")}), std::invalid_argument);
}

TEST(OrientByColoring, InvariantUnderMonotoneTransforms)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testing::random_graph(10, 0.5, rng);
        const auto values = testing::random_injective_values(10, rng);
        std::vector<double> warped(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            warped[i] = std::exp(3 * values[i]) + 7;
        const Orientation a = orient_by_coloring(g, Coloring(values));
        const Orientation b = orient_by_coloring(g, Coloring(warped));
        EXPECT_EQ(a.arcs(g), b.arcs(g));
    }
}

TEST(FindCyclicTriangle, Examples)
{
    const Graph k3 = complete_graph(3);
    const std::vector<Edge> cyclic = {{0, 1}, {1, 2}, {2, 0}};
    const Orientation o = Orientation::from_arcs(k3, cyclic);
    EXPECT_FALSE(o.irrotational());
    EXPECT_EQ(find_cyclic_triangle(k3, o), (Triangle{0, 1, 2}));

    const Graph c4 = cycle_graph(4);
    const std::vector<Edge> around = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    EXPECT_EQ(find_cyclic_triangle(c4, Orientation::from_arcs(c4, around)), std::nullopt);

    std::mt19937_64 rng(8);
    const Graph g = testing::random_graph(12, 0.7, rng);
    const Orientation pot = orient_by_coloring(g, Coloring(testing::random_injective_values(12, rng)));
    EXPECT_EQ(find_cyclic_triangle(g, pot), std::nullopt);
}

TEST(FindCyclicTriangle, ReturnsLexicographicallySmallest)
{
    // K_4 with 1->2->3->1 cyclic and 0 a source: only {1,2,3} is cyclic.
    const Graph k4 = complete_graph(4);
    const std::vector<Edge> arcs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
    EXPECT_EQ(find_cyclic_triangle(k4, Orientation::from_arcs(k4, arcs)), (Triangle{1, 2, 3}));

    // Cyclic: {0,1,2} (1->0->2->1) and {0,1,3} (1->0->3->1).
    const std::vector<Edge> two = {{1, 0}, {0, 2}, {0, 3}, {2, 1}, {2, 3}, {3, 1}};
    const Orientation o = Orientation::from_arcs(k4, two);
    EXPECT_EQ(find_cyclic_triangle(k4, o), (Triangle{0, 1, 2}));
    EXPECT_EQ(o.cyclic_witness(), (Triangle{0, 1, 2}));
}

TEST(FromArcs, ValidatesCoverage)
{
    const Graph k3 = complete_graph(3);
    const std::vector<Edge> missing = {{0, 1}, {1, 2}};
    EXPECT_THROW(Orientation::from_arcs(k3, missing), std::invalid_argument);
    const std::vector<Edge> twice = {{0, 1}, {1, 0}, {1, 2}};
    EXPECT_THROW(Orientation::from_arcs(k3, twice), std::invalid_argument);
    const std::vector<Edge> foreign = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    EXPECT_THROW(Orientation::from_arcs(k3, foreign), std::invalid_argument);
}

TEST(ExitSet, SinkSourceAndCompleteGraph)
{
    const Graph oct = octahedron_graph();
    // Height along the 0-1 axis: 0 bottom, 1 top.
    const Orientation o = orient_by_coloring(oct, Coloring({0, 10, 5, 5, 5, 5}));
    const Subgraph sink = exit_set(oct, o, 1);
    EXPECT_EQ(sink.graph, unit_sphere(oct, 1).graph);
    EXPECT_EQ(sink.parent_ids, unit_sphere(oct, 1).parent_ids);
    EXPECT_EQ(exit_set(oct, o, 0).graph.vertex_count(), 0U);

    const Graph k6 = complete_graph(6);
    const Orientation ids = orient_by_coloring(k6, Coloring::identity(6));
    for (Vertex k = 0; k < 6; ++k)
        EXPECT_EQ(exit_set(k6, ids, k).graph, complete_graph(k));
}

TEST(ExitSet, Errors)
{
    const Graph k3 = complete_graph(3);
    const Orientation ids = orient_by_coloring(k3, Coloring::identity(3));
    EXPECT_THROW(exit_set(k3, ids, 3), std::out_of_range);
    const std::vector<Edge> cyclic = {{0, 1}, {1, 2}, {2, 0}};
    const Orientation bad = Orientation::from_arcs(k3, cyclic);
    EXPECT_THROW(exit_set(k3, bad, 0), NotIrrotational);
    EXPECT_THROW(ph_index(k3, bad, 0), NotIrrotational);
    EXPECT_THROW(index_vector(k3, bad), NotIrrotational);
    EXPECT_THROW(verify_f_identity(k3, bad), NotIrrotational);
}

TEST(PhIndex, CompleteGraphHasOneMinimum)
{
    for (std::size_t n = 1; n <= 7; ++n) {
        const Graph g = complete_graph(n);
        const Orientation o = orient_by_coloring(g, Coloring::identity(n));
        EXPECT_EQ(ph_index(g, o, 0), 1);
        for (Vertex v = 1; v < n; ++v)
            EXPECT_EQ(ph_index(g, o, v), 0);
    }
}

TEST(PhIndex, CycleExtremaBalance)
{
    std::mt19937_64 rng(21);
    for (std::size_t n = 4; n <= 20; ++n) {
        const Graph g = cycle_graph(n);
        const Coloring c(testing::random_injective_values(n, rng));
        const Orientation o = orient_by_coloring(g, c);
        int maxima = 0;
        int minima = 0;
        for (Vertex v = 0; v < n; ++v) {
            const auto i = ph_index(g, o, v);
            const Vertex a = static_cast<Vertex>((v + 1) % n);
            const Vertex b = static_cast<Vertex>((v + n - 1) % n);
            if (c.precedes(a, v) && c.precedes(b, v)) {
                EXPECT_EQ(i, -1);
                ++maxima;
            } else if (c.precedes(v, a) && c.precedes(v, b)) {
                EXPECT_EQ(i, 1);
                ++minima;
            } else {
                EXPECT_EQ(i, 0);
            }
        }
        EXPECT_EQ(maxima, minima);
        EXPECT_GE(minima, 1);
    }
}

TEST(PhIndex, TriangleFreeIsOneMinusInDegree)
{
    std::mt19937_64 rng(4);
    const std::vector<Graph> graphs = {utility_graph(), cycle_graph(9), path_graph(6), complete_bipartite_graph(2, 5)};
    for (const Graph& g : graphs) {
        for (int trial = 0; trial < 20; ++trial) {
            const Orientation o = orient_by_coloring(g, Coloring(testing::random_injective_values(g.vertex_count(), rng)));
            const IndexVector iv = index_vector(g, o);
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                EXPECT_EQ(ph_index(g, o, v), 1 - static_cast<std::int64_t>(o.in_degree(v)));
                EXPECT_EQ(iv.values[v], 1 - static_cast<std::int64_t>(o.in_degree(v)));
            }
        }
    }
}

TEST(IndexVector, IcosahedronFlow)
{
    const Graph g = icosahedron_graph();
    const Coloring c(testing::kIcosahedronFlow);
    const Orientation o = orient_by_coloring(g, c);
    const IndexVector iv = index_vector(g, o);
    EXPECT_EQ(iv.values, testing::kIcosahedronFlowIndices);
    const auto rank = ranks_of(c);
    for (Vertex v = 0; v < 12; ++v)
        EXPECT_EQ(testing::brute_force_index(g, rank, v), iv.values[v]);
    EXPECT_EQ(std::count(iv.values.begin(), iv.values.end(), 1), 4);
    EXPECT_EQ(std::count(iv.values.begin(), iv.values.end(), -1), 2);
    EXPECT_EQ(iv.total(), 2);
}

TEST(IndexVector, UtilityGraphAllNonZero)
{
    // Left part below the right part: sources of index 1, then in-degree 3 giving -2.
    const Graph g = utility_graph();
    const PoincareHopfReport r = verify_poincare_hopf(g, orient_by_coloring(g, Coloring::identity(6)));
    EXPECT_EQ(r.indices.values, (std::vector<std::int64_t>{1, 1, 1, -2, -2, -2}));
    EXPECT_EQ(r.chi, -3);
    EXPECT_TRUE(r.passed);
}

TEST(IndexVector, ThreadCountDoesNotMatter)
{
    std::mt19937_64 rng(6);
    const Graph g = testing::random_graph(60, 0.4, rng);
    const Orientation o = orient_by_coloring(g, Coloring(testing::random_injective_values(60, rng)));
    EXPECT_EQ(index_vector(g, o, 1).values, index_vector(g, o, 4).values);
}

TEST(FIdentity, TriangleAndSingleVertex)
{
    const Graph k3 = complete_graph(3);
    const FIdentityReport r = verify_f_identity(k3, orient_by_coloring(k3, Coloring::identity(3)));
    EXPECT_EQ(r.rhs, (Polynomial{1, 3, 3, 1}));
    EXPECT_EQ(r.lhs, r.rhs);
    EXPECT_TRUE(r.passed);

    const Graph one = complete_graph(1);
    const FIdentityReport s = verify_f_identity(one, orient_by_coloring(one, Coloring::identity(1)));
    EXPECT_EQ(s.rhs, (Polynomial{1, 1}));
    EXPECT_TRUE(s.passed);
}

TEST(IndexIdentities, RandomGraphsAndColorings)
{
    std::mt19937_64 rng(2024);
    const double densities[] = {0.3, 0.5, 0.8};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
        const Graph g = testing::random_graph(n, densities[trial % 3], rng);
        const Coloring c(testing::random_injective_values(n, rng));
        const Orientation o = orient_by_coloring(g, c);

        const PoincareHopfReport ph = verify_poincare_hopf(g, o);
        ASSERT_TRUE(ph.passed) << "trial " << trial;
        EXPECT_EQ(ph.chi, testing::brute_force_chi(g));

        const auto rank = ranks_of(c);
        for (Vertex v = 0; v < n; ++v) {
            EXPECT_EQ(ph.indices.values[v], ph_index(g, o, v));
            EXPECT_EQ(ph.indices.values[v], testing::brute_force_index(g, rank, v));
        }

        const FIdentityReport fi = verify_f_identity(g, o);
        ASSERT_TRUE(fi.passed) << "trial " << trial;
        // At t = -1 the identity reads 1 - chi = 1 - sum of indices.
        EXPECT_EQ(fi.lhs_at_minus_one, Rational(1 - ph.chi));
        EXPECT_EQ(fi.rhs_at_minus_one, Rational(1 - ph.indices.total()));
    }
}

} // namespace
} // namespace phcurv
