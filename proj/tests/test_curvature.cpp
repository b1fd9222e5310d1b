#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "phcurv/curvature.hpp"
#include "phcurv/registry.hpp"

namespace phcurv {
namespace {

/// 1 - f_0/2 + f_1/3 - ... over the sphere's f-vector, with the sphere
/// counted by subset enumeration.
Rational closed_form_curvature(const Graph& g, Vertex v)
{
    const auto f = testing::brute_force_f_vector(unit_sphere(g, v).graph);
    Rational k = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        k += Rational((i % 2 == 0 ? -1 : 1) * static_cast<long long>(f[i]), static_cast<long long>(i + 2));
    return k;
}

void expect_constant(const CurvatureVector& k, const Rational& value)
{
    ASSERT_EQ(k.mode, CurvatureVector::Mode::exact);
    for (std::size_t v = 0; v < k.size(); ++v)
        EXPECT_EQ(k.exact[v], value) << "vertex " << v;
}

TEST(ExactCurvature, GoldenValues)
{
    expect_constant(exact_curvature(icosahedron_graph()), Rational(1, 6));
    expect_constant(exact_curvature(octahedron_graph()), Rational(1, 3));
    expect_constant(exact_curvature(complete_graph(4)), Rational(1, 4));
    expect_constant(exact_curvature(complete_graph(3)), Rational(1, 3));
    for (std::size_t n = 4; n <= 12; ++n)
        expect_constant(exact_curvature(cycle_graph(n)), Rational(0));
    EXPECT_EQ(exact_curvature(icosahedron_graph()).total(), 2);
}

TEST(ExactCurvature, PathBoundary)
{
    for (std::size_t k = 3; k <= 10; ++k) {
        const CurvatureVector c = exact_curvature(path_graph(k));
        EXPECT_EQ(c.exact.front(), Rational(1, 2));
        EXPECT_EQ(c.exact.back(), Rational(1, 2));
        for (std::size_t v = 1; v + 1 < k; ++v)
            EXPECT_EQ(c.exact[v], 0);
        EXPECT_EQ(c.total(), 1);
    }
}

TEST(ExactCurvature, MatchesClosedFormAndSumsToChi)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(1 + trial % 12, 0.3 + 0.005 * trial, rng);
        const CurvatureVector k = exact_curvature(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            EXPECT_EQ(k.exact[v], closed_form_curvature(g, v));
        const GaussBonnetReport r = verify_gauss_bonnet(k, g);
        EXPECT_TRUE(r.passed);
        EXPECT_EQ(r.chi, testing::brute_force_chi(g));
    }
}

TEST(ExactCurvature, ThreadCountDoesNotMatter)
{
    std::mt19937_64 rng(78);
    const Graph g = testing::random_graph(40, 0.4, rng);
    ComplexOptions four;
    four.threads = 4;
    EXPECT_EQ(exact_curvature(g).exact, exact_curvature(g, four).exact);
}

TEST(FunctionalGaussBonnet, Examples)
{
    const FunctionalGaussBonnetReport k3 = verify_functional_gauss_bonnet(complete_graph(3));
    // Each unit sphere is K_2 with F(t) = t + t^2 + t^3/3.
    EXPECT_EQ(k3.rhs, (Polynomial{0, 3, 3, 1}));
    EXPECT_TRUE(k3.passed);
    EXPECT_EQ(k3.chi_from_lhs, 1);
    EXPECT_EQ(k3.chi_from_rhs, 1);

    const FunctionalGaussBonnetReport one = verify_functional_gauss_bonnet(complete_graph(1));
    EXPECT_EQ(one.lhs, (Polynomial{0, 1}));
    EXPECT_EQ(one.rhs, (Polynomial{0, 1}));
    EXPECT_TRUE(one.passed);
}

TEST(FunctionalGaussBonnet, RandomGraphs)
{
    std::mt19937_64 rng(31);
    const double densities[] = {0.3, 0.5, 0.8};
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = testing::random_graph(1 + rng() % 12, densities[trial % 3], rng);
        const FunctionalGaussBonnetReport r = verify_functional_gauss_bonnet(g);
        ASSERT_TRUE(r.passed) << "trial " << trial;
        EXPECT_EQ(r.chi_from_rhs, Rational(testing::brute_force_chi(g)));
        EXPECT_EQ(r.chi_from_lhs, r.chi_from_rhs);
    }
}

TEST(FiniteMeasure, PointMassIsIndexVector)
{
    const Graph g = icosahedron_graph();
    const Coloring c(testing::kIcosahedronFlow);
    FiniteSupport m{{{c, Rational(1)}}};
    const CurvatureVector k = curvature_from_finite_measure(g, m);
    for (Vertex v = 0; v < 12; ++v)
        EXPECT_EQ(k.exact[v], testing::kIcosahedronFlowIndices[v]);
}

TEST(FiniteMeasure, SquareRotationsAverageToZero)
{
    const Graph g = cycle_graph(4);
    FiniteSupport m;
    for (int r = 0; r < 4; ++r) {
        std::vector<double> values(4);
        for (int v = 0; v < 4; ++v)
            values[static_cast<std::size_t>(v)] = (v + r) % 4;
        m.atoms.push_back({Coloring(values), Rational(1, 4)});
    }
    expect_constant(curvature_from_finite_measure(g, m), Rational(0));
}

TEST(FiniteMeasure, TriangleAllOrderings)
{
    const Graph g = complete_graph(3);
    FiniteSupport m;
    std::vector<double> values = {0, 1, 2};
    do
        m.atoms.push_back({Coloring(values), Rational(1, 6)});
    while (std::next_permutation(values.begin(), values.end()));
    ASSERT_EQ(m.atoms.size(), 6U);
    const CurvatureVector k = curvature_from_finite_measure(g, m);
    expect_constant(k, Rational(1, 3));
    EXPECT_EQ(k.exact, exact_curvature(g).exact);
}

TEST(FiniteMeasure, RejectsBadWeights)
{
    const Graph g = complete_graph(2);
    FiniteSupport half{{{Coloring::identity(2), Rational(1, 2)}}};
    EXPECT_THROW(curvature_from_finite_measure(g, half), std::invalid_argument);
    FiniteSupport negative{{{Coloring::identity(2), Rational(3, 2)}, {Coloring({1, 0}), Rational(-1, 2)}}};
    EXPECT_THROW(curvature_from_finite_measure(g, negative), std::invalid_argument);
    EXPECT_THROW(curvature_from_finite_measure(g, FiniteSupport{}), std::invalid_argument);
}

TEST(UniformOrder, AllOrderingsEqualExactCurvature)
{
    std::mt19937_64 rng(55);
    std::vector<Graph> corpus = {complete_graph(4), cycle_graph(5), path_graph(6), octahedron_graph(), utility_graph(),
                                 testing::bipyramid(4)};
    for (int i = 0; i < 12; ++i)
        corpus.push_back(testing::random_graph(3 + i % 5, 0.5, rng));
    for (const Graph& g : corpus)
        EXPECT_EQ(testing::all_orderings_curvature(g), exact_curvature(g).exact);
}

TEST(MonteCarlo, IcosahedronAndK4)
{
    const struct {
        Graph g;
        Rational exact;
    } cases[] = {{icosahedron_graph(), Rational(1, 6)}, {complete_graph(4), Rational(1, 4)}};
    for (const auto& c : cases) {
        const CurvatureVector k = mc_curvature(c.g, UniformOrder{}, 100'000, 7);
        ASSERT_EQ(k.mode, CurvatureVector::Mode::monte_carlo);
        for (std::size_t v = 0; v < k.size(); ++v)
            EXPECT_LE(std::abs(k.estimate[v] - to_double(c.exact)), 3 * k.standard_error[v]) << "vertex " << v;
        EXPECT_TRUE(verify_gauss_bonnet(k, c.g).passed);
        EXPECT_EQ(k.total(), Rational(euler_characteristic(count_simplices(c.g))));
    }
}

TEST(MonteCarlo, SingleSampleIsAnIndexVector)
{
    const Graph g = utility_graph();
    const CurvatureVector k = mc_curvature(g, UniformOrder{}, 1, 3);
    BigInt sum = 0;
    for (std::size_t v = 0; v < k.size(); ++v) {
        EXPECT_EQ(k.estimate[v], static_cast<double>(k.index_sum[v]));
        EXPECT_TRUE(std::isnan(k.standard_error[v]));
        sum += k.index_sum[v];
    }
    EXPECT_EQ(sum, -3);
}

TEST(MonteCarlo, DeterministicAcrossRunsAndThreads)
{
    const Graph g = octahedron_graph();
    const CurvatureVector a = mc_curvature(g, UniformOrder{}, 5000, 11, 1);
    const CurvatureVector b = mc_curvature(g, UniformOrder{}, 5000, 11, 1);
    const CurvatureVector c = mc_curvature(g, UniformOrder{}, 5000, 11, 3);
    EXPECT_EQ(a.index_sum, b.index_sum);
    EXPECT_EQ(a.index_sum, c.index_sum);
    EXPECT_EQ(a.standard_error, c.standard_error);
    const CurvatureVector d = mc_curvature(g, UniformOrder{}, 5000, 12, 1);
    EXPECT_NE(a.index_sum, d.index_sum);
}

TEST(MonteCarlo, SamplerBackedMeasure)
{
    const Graph g = cycle_graph(6);
    SamplerBacked reverse_ids{[](CounterRng&) { return Coloring({5, 4, 3, 2, 1, 0}); }, "fixed"};
    const CurvatureVector k = mc_curvature(g, reverse_ids, 10, 1);
    const IndexVector iv = index_vector(g, orient_by_coloring(g, Coloring({5, 4, 3, 2, 1, 0})));
    for (Vertex v = 0; v < 6; ++v)
        EXPECT_EQ(k.estimate[v], static_cast<double>(iv.values[v]));
}

TEST(MonteCarlo, Errors)
{
    const Graph g = complete_graph(3);
    EXPECT_THROW(mc_curvature(g, UniformOrder{}, 0, 1), std::invalid_argument);
    EXPECT_THROW(mc_curvature(g, FiniteSupport{{{Coloring::identity(3), Rational(1)}}}, 10, 1), std::invalid_argument);
    EXPECT_THROW(mc_curvature(g, SamplerBacked{}, 10, 1), std::invalid_argument);
}

TEST(GaussBonnet, KnownTotals)
{
    const GaussBonnetReport ico = verify_gauss_bonnet(exact_curvature(icosahedron_graph()), icosahedron_graph());
    EXPECT_TRUE(ico.passed);
    EXPECT_EQ(ico.total, 2);
    const GaussBonnetReport util = verify_gauss_bonnet(exact_curvature(utility_graph()), utility_graph());
    EXPECT_TRUE(util.passed);
    EXPECT_EQ(util.total, -3);

    CurvatureVector wrong = exact_curvature(utility_graph());
    wrong.exact[0] += 1;
    EXPECT_FALSE(verify_gauss_bonnet(wrong, utility_graph()).passed);
}

} // namespace
} // namespace phcurv
