#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phcurv/graph.hpp"
#include "phcurv/polynomial.hpp"
#include "phcurv/rational.hpp"

namespace phcurv {

inline constexpr std::uint64_t kDefaultSimplexBudget = 100'000'000;

/// Thrown when clique enumeration would produce more simplices than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget);
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

struct ComplexOptions {
    /// Keep only simplices of dimension <= max_dim.
    std::optional<std::size_t> max_dim;
    std::uint64_t budget = kDefaultSimplexBudget;
    /// Worker threads for clique counting; 0 means one per hardware thread.
    unsigned threads = 1;
};

/// Reads PHCURV_BUDGET when set, else kDefaultSimplexBudget.
std::uint64_t budget_from_environment();

/// Number of k-simplices for k = 0..dim. `truncated` records that a
/// dimension cap dropped simplices, in which case the counts are partial.
struct FVector {
    std::vector<BigInt> counts;
    bool truncated = false;

    int dim() const { return static_cast<int>(counts.size()) - 1; }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// The Whitney (clique) complex of a graph with every simplex listed.
///
/// Simplices of dimension k are stored as sorted (k+1)-tuples of vertex ids,
/// packed contiguously and sorted lexicographically.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::vector<Vertex>> packed, bool truncated);

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(packed_.size()) - 1; }
    bool truncated() const { return truncated_; }
    std::size_t count(std::size_t k) const { return k < packed_.size() ? packed_[k].size() / (k + 1) : 0; }
    std::span<const Vertex> simplex(std::size_t k, std::size_t i) const { return {packed_[k].data() + i * (k + 1), k + 1}; }
    /// `vertices` must be sorted.
    bool contains(std::span<const Vertex> vertices) const;

    FVector f_vector() const;

private:
    std::vector<std::vector<Vertex>> packed_;
    bool truncated_ = false;
};

/// Lists every complete subgraph of g (up to opts.max_dim).
/// Throws BudgetExceeded if more than opts.budget simplices would be stored.
SimplicialComplex whitney_complex(const Graph& g, const ComplexOptions& opts = {});

/// Counts complete subgraphs without listing them, using pivot-based
/// counting over a degeneracy ordering. Same budget semantics as
/// whitney_complex: the total number of counted simplices is what is bounded.
FVector count_simplices(const Graph& g, const ComplexOptions& opts = {});

/// Alternating sum of the f-vector. Throws std::domain_error when truncated.
BigInt euler_characteristic(const FVector& f);
BigInt euler_characteristic(const SimplicialComplex& c);

/// Euler characteristic of the Whitney complex of the subgraph of g induced
/// on `subset` (a bitset over g's vertices). Only cliques that survive the
/// pivot recursion without a pivot contribute, so this is much cheaper than
/// counting the f-vector.
std::int64_t induced_euler_characteristic(const Graph& g, std::span<const bits::Word> subset);

/// Induced subgraph on the neighbours of v.
Subgraph unit_sphere(const Graph& g, Vertex v);

/// 1 + f_0 t + f_1 t^2 + ... + f_d t^{d+1}.
Polynomial f_function(const FVector& f);

} // namespace phcurv
