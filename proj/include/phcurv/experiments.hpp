#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phcurv/orientation.hpp"
#include "phcurv/rng.hpp"

namespace phcurv::experiments {

struct Digraph {
    Graph graph;
    Orientation orientation;
};

/// Erdos-Renyi digraph: for every pair u < v (lexicographic), one draw
/// decides presence with probability p and a second one the direction with
/// probability 1/2. Both draws always happen, so direction is independent of
/// presence. Throws std::invalid_argument unless 0 <= p <= 1.
Digraph random_er_digraph(std::size_t n, double p, CounterRng& rng);
/// Uses stream 0 of `seed`.
Digraph random_er_digraph(std::size_t n, double p, std::uint64_t seed);

struct IrrotationalDraw {
    Digraph digraph;
    /// 1-based attempt that succeeded.
    std::uint64_t attempts = 0;
};

/// Rejection sampling: attempt a draws random_er_digraph from CounterRng(seed, a)
/// and the first one without a cyclic triangle is returned, so the result is
/// uniform over irrotational orientations of the sampled graphs. nullopt after
/// max_attempts failures.
std::optional<IrrotationalDraw> sample_irrotational_digraph(std::size_t n, double p, std::uint64_t seed,
                                                            std::uint64_t max_attempts);

struct TriangleCensus {
    std::uint64_t triangles = 0;
    std::uint64_t cyclic = 0;
};

TriangleCensus triangle_census(const Graph& g, const Orientation& o);

struct Estimate {
    std::string name;
    double value = 0;
    double standard_error = 0;
};

struct Target {
    std::string name;
    double value = 0;
};

/// Output of one experiment. Trial t always draws from CounterRng(seed, stream)
/// with a stream derived from t, so reports are reproducible from the
/// parameters alone and independent of the worker count.
struct ExperimentReport {
    std::string kind;
    std::size_t n = 0;
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<Estimate> estimates;
    std::vector<Target> targets;
    std::vector<std::string> notes;
    /// No triangles were seen, so ratio-type estimates are undefined (NaN).
    bool empty_denominator = false;
    /// Per-trial rows.
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    const Estimate& estimate(const std::string& name) const;
    double target(const std::string& name) const;
};

/// Fraction of all sampled triangles that carry a directed 3-cycle (target 1/4).
ExperimentReport triangle_cycle_fraction(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Fraction of sampled digraphs without any cyclic triangle, plus the naive
/// independence approximation (3/4)^T using the mean triangle count T.
ExperimentReport irrotational_probability(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

/// Expected acyclic-triangle count at density p against expected triangle
/// count at density q = p (3/4)^{1/3}; the target ratio is 1.
ExperimentReport effective_density_check(std::size_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

} // namespace phcurv::experiments
