#include "phcurv/curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "phcurv/parallel.hpp"

namespace phcurv {

void validate(const FiniteSupport& m)
{
    if (m.atoms.empty())
        throw std::invalid_argument("finite-support measure has no atoms");
    Rational sum = 0;
    for (const auto& a : m.atoms) {
        if (a.weight < 0)
            throw std::invalid_argument("finite-support measure has a negative weight " + to_string(a.weight));
        sum += a.weight;
    }
    if (sum != 1)
        throw std::invalid_argument("finite-support weights sum to " + to_string(sum) + ", not 1");
}

double CurvatureVector::value(std::size_t v) const { return mode == Mode::exact ? to_double(exact[v]) : estimate[v]; }

Rational CurvatureVector::total() const
{
    Rational sum = 0;
    if (mode == Mode::exact) {
        for (const auto& k : exact)
            sum += k;
        return sum;
    }
    BigInt s = 0;
    for (auto x : index_sum)
        s += x;
    return Rational(s, BigInt(samples));
}

CurvatureVector exact_curvature(const Graph& g, const ComplexOptions& opts)
{
    CurvatureVector k;
    k.mode = CurvatureVector::Mode::exact;
    k.exact.resize(g.vertex_count());
    ComplexOptions inner = opts;
    inner.threads = 1;
    parallel_blocks(g.vertex_count(), opts.threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) {
            const Subgraph sphere = unit_sphere(g, static_cast<Vertex>(v));
            const Polynomial big_f = antiderivative(f_function(count_simplices(sphere.graph, inner)));
            k.exact[v] = -big_f.evaluate(-1);
        }
    });
    return k;
}

FunctionalGaussBonnetReport verify_functional_gauss_bonnet(const Graph& g, const ComplexOptions& opts)
{
    FunctionalGaussBonnetReport r;
    r.lhs = f_function(count_simplices(g, opts)) - Polynomial::constant(1);
    ComplexOptions inner = opts;
    inner.threads = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        r.rhs += antiderivative(f_function(count_simplices(unit_sphere(g, v).graph, inner)));
    r.passed = r.lhs == r.rhs;
    r.chi_from_lhs = -r.lhs.evaluate(-1);
    r.chi_from_rhs = -r.rhs.evaluate(-1);
    return r;
}

CurvatureVector curvature_from_finite_measure(const Graph& g, const FiniteSupport& m, unsigned threads)
{
    validate(m);
    CurvatureVector k;
    k.mode = CurvatureVector::Mode::exact;
    k.exact.assign(g.vertex_count(), Rational(0));
    for (const auto& atom : m.atoms) {
        const IndexVector iv = index_vector(g, orient_by_coloring(g, atom.coloring), threads);
        for (std::size_t v = 0; v < iv.values.size(); ++v)
            k.exact[v] += atom.weight * iv.values[v];
    }
    return k;
}

namespace {

Coloring draw_coloring(const ColoringMeasure& m, std::size_t n, CounterRng& rng)
{
    if (std::holds_alternative<UniformOrder>(m)) {
        const auto perm = random_permutation(n, rng);
        std::vector<double> values(n);
        for (std::size_t rank = 0; rank < n; ++rank)
            values[perm[rank]] = static_cast<double>(rank);
        return Coloring(std::move(values));
    }
    return std::get<SamplerBacked>(m).draw(rng);
}

} // namespace

CurvatureVector mc_curvature(const Graph& g, const ColoringMeasure& m, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads)
{
    if (samples == 0)
        throw std::invalid_argument("Monte Carlo curvature needs at least one sample");
    if (std::holds_alternative<FiniteSupport>(m))
        throw std::invalid_argument("finite-support measures are averaged exactly; use curvature_from_finite_measure");
    if (const auto* s = std::get_if<SamplerBacked>(&m); s != nullptr && !s->draw)
        throw std::invalid_argument("sampler-backed measure has no sampler");

    const std::size_t n = g.vertex_count();
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), samples));
    std::vector<std::vector<std::int64_t>> sums(workers, std::vector<std::int64_t>(n, 0));
    std::vector<std::vector<std::int64_t>> squares(workers, std::vector<std::int64_t>(n, 0));
    parallel_blocks(samples, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            CounterRng rng(seed, s);
            const Coloring c = draw_coloring(m, n, rng);
            if (c.size() != n)
                throw std::invalid_argument("sampler produced a coloring of the wrong size");
            const IndexVector iv = index_vector(g, orient_by_coloring(g, c));
            for (std::size_t v = 0; v < n; ++v) {
                sums[w][v] += iv.values[v];
                squares[w][v] += iv.values[v] * iv.values[v];
            }
        }
    });

    CurvatureVector k;
    k.mode = CurvatureVector::Mode::monte_carlo;
    k.samples = samples;
    k.index_sum.assign(n, 0);
    k.index_square_sum.assign(n, 0);
    for (unsigned w = 0; w < workers; ++w) {
        for (std::size_t v = 0; v < n; ++v) {
            k.index_sum[v] += sums[w][v];
            k.index_square_sum[v] += squares[w][v];
        }
    }
    k.estimate.resize(n);
    k.standard_error.resize(n);
    const BigInt count(samples);
    for (std::size_t v = 0; v < n; ++v) {
        k.estimate[v] = to_double(Rational(BigInt(k.index_sum[v]), count));
        if (samples < 2) {
            k.standard_error[v] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        // Var of the mean: (N*S2 - S^2) / (N^2 (N-1)), exact up to the final sqrt.
        const BigInt s1(k.index_sum[v]);
        const BigInt s2(k.index_square_sum[v]);
        const Rational var_mean(count * s2 - s1 * s1, count * count * (count - 1));
        k.standard_error[v] = std::sqrt(to_double(var_mean));
    }
    return k;
}

GaussBonnetReport verify_gauss_bonnet(const CurvatureVector& k, const Graph& g, const ComplexOptions& opts)
{
    if (k.size() != g.vertex_count())
        throw std::invalid_argument("curvature vector size does not match the graph");
    GaussBonnetReport r;
    r.chi = euler_characteristic(count_simplices(g, opts));
    r.total = k.total();
    if (k.mode == CurvatureVector::Mode::exact) {
        r.basis = "exact rational sum";
        r.passed = r.total == Rational(r.chi);
    } else {
        BigInt s = 0;
        for (auto x : k.index_sum)
            s += x;
        r.basis = "integer identity: sum of per-sample index sums equals samples * chi";
        r.passed = s == r.chi * BigInt(k.samples);
    }
    return r;
}

} // namespace phcurv
