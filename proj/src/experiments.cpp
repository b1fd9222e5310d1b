#include "phcurv/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/random/bernoulli_distribution.hpp>

#include "phcurv/parallel.hpp"

namespace phcurv::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
}

void check_trials(std::uint64_t trials)
{
    if (trials == 0)
        throw std::invalid_argument("experiments need at least one trial");
}

double binomial3(std::size_t n)
{
    const double m = static_cast<double>(n);
    return n < 3 ? 0.0 : m * (m - 1) * (m - 2) / 6.0;
}

/// Mean and standard error of the mean of integer samples, from exact sums.
Estimate mean_estimate(std::string name, const std::vector<std::uint64_t>& xs)
{
    const auto count = static_cast<double>(xs.size());
    long double s1 = 0;
    long double s2 = 0;
    for (auto x : xs) {
        s1 += static_cast<long double>(x);
        s2 += static_cast<long double>(x) * static_cast<long double>(x);
    }
    const double mean = static_cast<double>(s1 / count);
    double se = kNaN;
    if (xs.size() > 1) {
        const long double var = (s2 - s1 * s1 / count) / (count - 1);
        se = std::sqrt(static_cast<double>(std::max<long double>(var, 0)) / count);
    }
    return {std::move(name), mean, se};
}

ExperimentReport start(std::string kind, std::size_t n, double p, std::uint64_t trials, std::uint64_t seed)
{
    check_probability(p);
    check_trials(trials);
    ExperimentReport r;
    r.kind = std::move(kind);
    r.n = n;
    r.p = p;
    r.trials = trials;
    r.seed = seed;
    return r;
}

} // namespace

const Estimate& ExperimentReport::estimate(const std::string& name) const
{
    for (const auto& e : estimates)
        if (e.name == name)
            return e;
    throw std::out_of_range("no estimate named '" + name + "'");
}

double ExperimentReport::target(const std::string& name) const
{
    for (const auto& t : targets)
        if (t.name == name)
            return t.value;
    throw std::out_of_range("no target named '" + name + "'");
}

Digraph random_er_digraph(std::size_t n, double p, CounterRng& rng)
{
    check_probability(p);
    boost::random::bernoulli_distribution<double> present(p);
    boost::random::bernoulli_distribution<double> forward(0.5);
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool keep = present(rng);
            const bool up = forward(rng);
            if (keep)
                arcs.push_back(up ? Edge{u, v} : Edge{v, u});
        }
    }
    Digraph d;
    d.graph = Graph::from_edges(n, arcs);
    d.orientation = Orientation::from_arcs(d.graph, arcs);
    return d;
}

Digraph random_er_digraph(std::size_t n, double p, std::uint64_t seed)
{
    CounterRng rng(seed, 0);
    return random_er_digraph(n, p, rng);
}

std::optional<IrrotationalDraw> sample_irrotational_digraph(std::size_t n, double p, std::uint64_t seed,
                                                            std::uint64_t max_attempts)
{
    check_probability(p);
    for (std::uint64_t a = 0; a < max_attempts; ++a) {
        CounterRng rng(seed, a);
        Digraph d = random_er_digraph(n, p, rng);
        if (d.orientation.irrotational())
            return IrrotationalDraw{std::move(d), a + 1};
    }
    return std::nullopt;
}

TriangleCensus triangle_census(const Graph& g, const Orientation& o)
{
    TriangleCensus c;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a)
                continue;
            const bool ab = o.points_to(a, b);
            for (Vertex x : g.neighbors(b)) {
                if (x <= b || !g.adjacent(a, x))
                    continue;
                ++c.triangles;
                const bool bx = o.points_to(b, x);
                const bool xa = o.points_to(x, a);
                if ((ab && bx && xa) || (!ab && !bx && !xa))
                    ++c.cyclic;
            }
        }
    }
    return c;
}

ExperimentReport triangle_cycle_fraction(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    ExperimentReport r = start("triangles", n, p, trials, seed);
    std::vector<TriangleCensus> per_trial(trials);
    parallel_blocks(trials, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            CounterRng rng(seed, t);
            const Digraph d = random_er_digraph(n, p, rng);
            per_trial[t] = triangle_census(d.graph, d.orientation);
        }
    });
    std::uint64_t triangles = 0;
    std::uint64_t cyclic = 0;
    r.columns = {"trial", "triangles", "cyclic"};
    for (std::size_t t = 0; t < trials; ++t) {
        triangles += per_trial[t].triangles;
        cyclic += per_trial[t].cyclic;
        r.rows.push_back({static_cast<double>(t), static_cast<double>(per_trial[t].triangles), static_cast<double>(per_trial[t].cyclic)});
    }
    r.estimates.push_back({"triangles_sampled", static_cast<double>(triangles), 0.0});
    if (triangles == 0) {
        r.empty_denominator = true;
        r.estimates.push_back({"cyclic_fraction", kNaN, kNaN});
        r.notes.emplace_back("no triangles were sampled; the cyclic fraction is undefined");
    } else {
        const double f = static_cast<double>(cyclic) / static_cast<double>(triangles);
        // Cyclicity of two triangles is independent even when they share an
        // edge, so the pooled binomial error applies.
        r.estimates.push_back({"cyclic_fraction", f, std::sqrt(f * (1 - f) / static_cast<double>(triangles))});
    }
    r.targets.push_back({"cyclic_fraction", 0.25});
    return r;
}

ExperimentReport irrotational_probability(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    ExperimentReport r = start("irrotational", n, p, trials, seed);
    std::vector<std::uint64_t> irrotational(trials);
    std::vector<std::uint64_t> triangles(trials);
    parallel_blocks(trials, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            CounterRng rng(seed, t);
            const Digraph d = random_er_digraph(n, p, rng);
            irrotational[t] = d.orientation.irrotational() ? 1 : 0;
            triangles[t] = triangle_census(d.graph, d.orientation).triangles;
        }
    });
    r.columns = {"trial", "triangles", "irrotational"};
    for (std::size_t t = 0; t < trials; ++t)
        r.rows.push_back({static_cast<double>(t), static_cast<double>(triangles[t]), static_cast<double>(irrotational[t])});
    const Estimate prob = mean_estimate("irrotational_probability", irrotational);
    const Estimate mean_t = mean_estimate("mean_triangles", triangles);
    r.estimates.push_back(prob);
    r.estimates.push_back(mean_t);
    r.targets.push_back({"independence_approximation", std::pow(0.75, mean_t.value)});
    r.notes.emplace_back("independence_approximation = (3/4)^(mean triangle count)");
    return r;
}

ExperimentReport effective_density_check(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads)
{
    ExperimentReport r = start("effective-density", n, p, trials, seed);
    const double q = p * std::cbrt(0.75);
    check_probability(q);
    std::vector<std::uint64_t> acyclic_at_p(trials);
    std::vector<std::uint64_t> triangles_at_q(trials);
    parallel_blocks(trials, threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            CounterRng rng_p(seed, 2 * t);
            const Digraph dp = random_er_digraph(n, p, rng_p);
            const TriangleCensus cp = triangle_census(dp.graph, dp.orientation);
            acyclic_at_p[t] = cp.triangles - cp.cyclic;
            CounterRng rng_q(seed, 2 * t + 1);
            const Digraph dq = random_er_digraph(n, q, rng_q);
            triangles_at_q[t] = triangle_census(dq.graph, dq.orientation).triangles;
        }
    });
    r.columns = {"trial", "acyclic_triangles_at_p", "triangles_at_q"};
    for (std::size_t t = 0; t < trials; ++t)
        r.rows.push_back({static_cast<double>(t), static_cast<double>(acyclic_at_p[t]), static_cast<double>(triangles_at_q[t])});

    const Estimate a = mean_estimate("acyclic_triangles_at_p", acyclic_at_p);
    const Estimate b = mean_estimate("triangles_at_q", triangles_at_q);
    r.estimates.push_back(a);
    r.estimates.push_back(b);
    r.estimates.push_back({"q", q, 0.0});
    if (a.value == 0 || b.value == 0) {
        r.empty_denominator = true;
        r.estimates.push_back({"ratio", kNaN, kNaN});
    } else {
        const double ratio = a.value / b.value;
        const double rel = std::hypot(a.standard_error / a.value, b.standard_error / b.value);
        r.estimates.push_back({"ratio", ratio, ratio * rel});
    }
    const double c3 = binomial3(n);
    r.targets.push_back({"expected_acyclic_at_p", c3 * p * p * p * 0.75});
    r.targets.push_back({"expected_triangles_at_q", c3 * q * q * q});
    r.targets.push_back({"ratio", 1.0});
    r.notes.emplace_back("q^3 = (3/4) p^3 exactly, so C(n,3) p^3 (3/4) = C(n,3) q^3");
    return r;
}

} // namespace phcurv::experiments
