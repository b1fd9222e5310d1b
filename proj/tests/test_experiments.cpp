#include <gtest/gtest.h>

#include <cmath>

#include "phcurv/experiments.hpp"
#include "phcurv/registry.hpp"

namespace phcurv {
namespace {

using namespace experiments;

/// Probability that a uniformly random orientation of K_4 has no directed
/// 3-cycle, by enumerating all 2^6 orientations.
double exact_k4_irrotational()
{
    const Graph g = complete_graph(4);
    const auto edges = g.edges();
    int acyclic = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Edge> arcs;
        for (std::size_t i = 0; i < edges.size(); ++i)
            arcs.push_back(mask >> i & 1U ? Edge{edges[i].second, edges[i].first} : edges[i]);
        const Orientation o = Orientation::from_arcs(g, arcs);
        acyclic += triangle_census(g, o).cyclic == 0;
        EXPECT_EQ(o.irrotational(), triangle_census(g, o).cyclic == 0);
    }
    return acyclic / 64.0;
}

TEST(RandomDigraph, Extremes)
{
    const Digraph empty = random_er_digraph(10, 0.0, 1);
    EXPECT_EQ(empty.graph.edge_count(), 0U);
    const Digraph full = random_er_digraph(10, 1.0, 1);
    EXPECT_EQ(full.graph, complete_graph(10));
    EXPECT_THROW(random_er_digraph(5, -0.1, 1), std::invalid_argument);
    EXPECT_THROW(random_er_digraph(5, 1.5, 1), std::invalid_argument);
}

TEST(RandomDigraph, SeedsAndStreams)
{
    const Digraph a = random_er_digraph(30, 0.5, 42);
    const Digraph b = random_er_digraph(30, 0.5, 42);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.orientation.arcs(a.graph), b.orientation.arcs(b.graph));
    EXPECT_NE(a.graph, random_er_digraph(30, 0.5, 43).graph);
    CounterRng s1(42, 1);
    EXPECT_NE(a.graph, random_er_digraph(30, 0.5, s1).graph);
}

TEST(RandomDigraph, DirectionIndependentOfPresence)
{
    // Changing p must not change the direction of edges present at both densities.
    const Digraph dense = random_er_digraph(40, 0.9, 7);
    const Digraph sparse = random_er_digraph(40, 0.3, 7);
    for (const auto& [u, v] : sparse.graph.edges()) {
        ASSERT_TRUE(dense.graph.adjacent(u, v));
        EXPECT_EQ(sparse.orientation.points_to(u, v), dense.orientation.points_to(u, v));
    }
}

TEST(RandomDigraph, RejectionSampledIrrotational)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto draw = sample_irrotational_digraph(8, 0.6, seed, 10'000);
        ASSERT_TRUE(draw.has_value());
        EXPECT_TRUE(draw->digraph.orientation.irrotational());
        EXPECT_EQ(triangle_census(draw->digraph.graph, draw->digraph.orientation).cyclic, 0U);
        // Attempts before the accepted one were all rejected.
        for (std::uint64_t a = 0; a + 1 < draw->attempts; ++a) {
            CounterRng rng(seed, a);
            EXPECT_FALSE(random_er_digraph(8, 0.6, rng).orientation.irrotational());
        }
    }
    // K_12 tournaments are almost never transitive.
    EXPECT_FALSE(sample_irrotational_digraph(12, 1.0, 1, 50).has_value());
}

TEST(TriangleCensus, HandBuilt)
{
    const Graph g = complete_graph(3);
    const std::vector<Edge> cycle = {{0, 1}, {1, 2}, {2, 0}};
    const std::vector<Edge> chain = {{0, 1}, {1, 2}, {0, 2}};
    EXPECT_EQ(triangle_census(g, Orientation::from_arcs(g, cycle)).cyclic, 1U);
    EXPECT_EQ(triangle_census(g, Orientation::from_arcs(g, chain)).cyclic, 0U);
    const Graph k5 = complete_graph(5);
    EXPECT_EQ(triangle_census(k5, orient_by_coloring(k5, Coloring::identity(5))).triangles, 10U);
}

TEST(TriangleFraction, QuarterOfTrianglesAreCyclic)
{
    const ExperimentReport r = triangle_cycle_fraction(30, 0.5, 200, 2024);
    const Estimate& f = r.estimate("cyclic_fraction");
    EXPECT_GE(r.estimate("triangles_sampled").value, 1e5);
    EXPECT_LE(std::abs(f.value - r.target("cyclic_fraction")), 3 * f.standard_error);
    EXPECT_EQ(r.rows.size(), 200U);
    EXPECT_FALSE(r.empty_denominator);
}

TEST(TriangleFraction, EmptyDenominator)
{
    const ExperimentReport r = triangle_cycle_fraction(10, 0.0, 5, 1);
    EXPECT_TRUE(r.empty_denominator);
    EXPECT_TRUE(std::isnan(r.estimate("cyclic_fraction").value));
    EXPECT_FALSE(r.notes.empty());
    EXPECT_THROW(triangle_cycle_fraction(10, 0.5, 0, 1), std::invalid_argument);
    EXPECT_THROW((void)r.estimate("nope"), std::out_of_range);
}

TEST(Irrotational, SingleTriangle)
{
    const ExperimentReport r = irrotational_probability(3, 1.0, 20000, 5);
    const Estimate& e = r.estimate("irrotational_probability");
    EXPECT_LE(std::abs(e.value - 0.75), 3 * e.standard_error);
    EXPECT_DOUBLE_EQ(r.estimate("mean_triangles").value, 1.0);
    EXPECT_DOUBLE_EQ(r.target("independence_approximation"), 0.75);
}

TEST(Irrotational, FourVerticesMatchEnumeration)
{
    const double exact = exact_k4_irrotational();
    EXPECT_DOUBLE_EQ(exact, 24.0 / 64.0); // the transitive tournaments
    const ExperimentReport r = irrotational_probability(4, 1.0, 20000, 6);
    const Estimate& e = r.estimate("irrotational_probability");
    EXPECT_LE(std::abs(e.value - exact), 3 * e.standard_error);
    // Triangles in K_4 share edges, so the independence guess is off.
    EXPECT_GT(std::abs(r.target("independence_approximation") - exact), 0.05);
}

TEST(EffectiveDensity, RatioNearOne)
{
    const ExperimentReport r = effective_density_check(25, 0.4, 2000, 9);
    const Estimate& ratio = r.estimate("ratio");
    EXPECT_LE(std::abs(ratio.value - 1.0), 3 * ratio.standard_error);
    EXPECT_NEAR(r.estimate("q").value, 0.4 * 0.9085602964160698, 1e-12);
    EXPECT_NEAR(r.target("expected_acyclic_at_p"), r.target("expected_triangles_at_q"), 1e-9);
    const Estimate& a = r.estimate("acyclic_triangles_at_p");
    EXPECT_LE(std::abs(a.value - r.target("expected_acyclic_at_p")), 3 * a.standard_error);
}

TEST(Experiments, IndependentOfWorkerCount)
{
    const auto same = [](const ExperimentReport& a, const ExperimentReport& b) {
        EXPECT_EQ(a.rows, b.rows);
        ASSERT_EQ(a.estimates.size(), b.estimates.size());
        for (std::size_t i = 0; i < a.estimates.size(); ++i) {
            EXPECT_EQ(a.estimates[i].value, b.estimates[i].value);
            EXPECT_EQ(a.estimates[i].standard_error, b.estimates[i].standard_error);
        }
    };
    same(triangle_cycle_fraction(15, 0.5, 50, 3, 1), triangle_cycle_fraction(15, 0.5, 50, 3, 4));
    same(irrotational_probability(8, 0.5, 50, 3, 1), irrotational_probability(8, 0.5, 50, 3, 3));
    same(effective_density_check(15, 0.5, 50, 3, 1), effective_density_check(15, 0.5, 50, 3, 2));
}

} // namespace
} // namespace phcurv
