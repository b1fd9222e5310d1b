#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "phcurv/complex.hpp"
#include "phcurv/orientation.hpp"
#include "phcurv/rng.hpp"

namespace phcurv {

/// Uniform distribution over all n! vertex orderings.
struct UniformOrder {};

struct WeightedColoring {
    Coloring coloring;
    Rational weight;
};

/// Finitely many colorings with exact weights summing to 1.
struct FiniteSupport {
    std::vector<WeightedColoring> atoms;
};

/// Colorings drawn from a caller-supplied sampler. `draw` must be a pure
/// function of the generator it is handed; each sample gets its own stream.
struct SamplerBacked {
    std::function<Coloring(CounterRng&)> draw;
    std::string label;
};

using ColoringMeasure = std::variant<UniformOrder, FiniteSupport, SamplerBacked>;

/// Throws std::invalid_argument unless every weight is >= 0 and they sum to exactly 1.
void validate(const FiniteSupport& m);

struct CurvatureVector {
    enum class Mode { exact, monte_carlo };

    Mode mode = Mode::exact;
    /// Exact mode.
    std::vector<Rational> exact;
    /// Monte Carlo mode: per-vertex sample means and standard errors.
    std::vector<double> estimate;
    std::vector<double> standard_error;
    /// Monte Carlo mode: integer sums of i(v) and i(v)^2 over all samples.
    std::vector<std::int64_t> index_sum;
    std::vector<std::int64_t> index_square_sum;
    std::uint64_t samples = 0;

    std::size_t size() const { return mode == Mode::exact ? exact.size() : estimate.size(); }
    double value(std::size_t v) const;
    /// Exact in both modes: in Monte Carlo mode it is sum(index_sum) / samples.
    Rational total() const;
};

/// K(v) = -F_{S(v)}(-1), the antiderivative of the unit sphere's f-function
/// evaluated at -1. Equals the index expectation under UniformOrder.
CurvatureVector exact_curvature(const Graph& g, const ComplexOptions& opts = {});

struct FunctionalGaussBonnetReport {
    /// f_G(t) - 1
    Polynomial lhs;
    /// sum_v F_{S(v)}(t)
    Polynomial rhs;
    bool passed = false;
    /// chi(G) read off each side at t = -1: -lhs(-1) and -rhs(-1).
    Rational chi_from_lhs;
    Rational chi_from_rhs;
};

FunctionalGaussBonnetReport verify_functional_gauss_bonnet(const Graph& g, const ComplexOptions& opts = {});

/// Exact weighted average of index vectors over the support.
CurvatureVector curvature_from_finite_measure(const Graph& g, const FiniteSupport& m, unsigned threads = 1);

/// Sample means of i(v) over `samples` colorings drawn from `m` (UniformOrder
/// or SamplerBacked). Sample s uses CounterRng(seed, s), so the result only
/// depends on (g, m, samples, seed).
CurvatureVector mc_curvature(const Graph& g, const ColoringMeasure& m, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1);

struct GaussBonnetReport {
    Rational total;
    BigInt chi;
    bool passed = false;
    /// How equality was established.
    std::string basis;
};

GaussBonnetReport verify_gauss_bonnet(const CurvatureVector& k, const Graph& g, const ComplexOptions& opts = {});

} // namespace phcurv
