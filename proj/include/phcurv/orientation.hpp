#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "phcurv/complex.hpp"
#include "phcurv/graph.hpp"
#include "phcurv/polynomial.hpp"

namespace phcurv {

using Triangle = std::array<Vertex, 3>;

/// Real values on vertices. Ties are broken by vertex id, so the induced
/// order on vertices is always strict and total.
class Coloring {
public:
    Coloring() = default;
    /// Throws std::invalid_argument on NaN or infinite values.
    explicit Coloring(std::vector<double> values);

    /// The coloring v -> v.
    static Coloring identity(std::size_t n);

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    /// Strict order: smaller value first, then smaller id.
    bool precedes(Vertex u, Vertex v) const
    {
        return values_[u] < values_[v] || (values_[u] == values_[v] && u < v);
    }
    /// Vertices sorted by precedes().
    std::vector<Vertex> order() const;

private:
    std::vector<double> values_;
};

/// Thrown when an index is requested for an orientation carrying a directed 3-cycle.
class NotIrrotational : public std::domain_error {
public:
    explicit NotIrrotational(const Triangle& witness);
    const Triangle& witness() const { return witness_; }

private:
    Triangle witness_;
};

/// A direction on every edge of a graph, stored as in-neighbour bitsets:
/// w is in in_row(v) iff the edge is directed w -> v.
///
/// The cyclic-triangle check runs once at construction.
class Orientation {
public:
    Orientation() = default;

    /// Orientation from (tail, head) pairs. Every edge of g must appear
    /// exactly once in one direction; throws std::invalid_argument otherwise.
    static Orientation from_arcs(const Graph& g, std::span<const Edge> arcs);

    std::size_t vertex_count() const { return n_; }
    std::span<const bits::Word> in_row(Vertex v) const { return {in_.data() + static_cast<std::size_t>(v) * words_, words_}; }
    /// True iff {u,v} is an edge directed u -> v.
    bool points_to(Vertex u, Vertex v) const { return bits::test(in_row(v), u); }
    std::size_t in_degree(Vertex v) const { return bits::count(in_row(v)); }

    bool irrotational() const { return !witness_.has_value(); }
    /// Lexicographically smallest cyclic triangle, if any.
    const std::optional<Triangle>& cyclic_witness() const { return witness_; }

    /// (tail, head) pairs in lexicographic order of the underlying edge.
    std::vector<Edge> arcs(const Graph& g) const;

private:
    friend Orientation orient_by_coloring(const Graph& g, const Coloring& c);
    Orientation(const Graph& g, std::vector<bits::Word> in);

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<bits::Word> in_;
    std::optional<Triangle> witness_;
};

/// Directs every edge from the lower to the higher vertex of the coloring.
Orientation orient_by_coloring(const Graph& g, const Coloring& c);

/// Lexicographically smallest triangle {a<b<c} of g that is a directed cycle.
std::optional<Triangle> find_cyclic_triangle(const Graph& g, const Orientation& o);

/// S^-(v): the subgraph induced on the vertices pointing towards v.
Subgraph exit_set(const Graph& g, const Orientation& o, Vertex v);

/// 1 - chi(S^-(v)), from the listed Whitney complex of the exit set.
std::int64_t ph_index(const Graph& g, const Orientation& o, Vertex v, const ComplexOptions& opts = {});

struct IndexVector {
    std::vector<std::int64_t> values;

    BigInt total() const;
};

/// Indices of every vertex via the signed pivot kernel on the in-neighbour
/// bitsets. Parallel over vertices; the result does not depend on `threads`.
IndexVector index_vector(const Graph& g, const Orientation& o, unsigned threads = 1);

struct PoincareHopfReport {
    IndexVector indices;
    BigInt chi;
    bool passed = false;
};

/// Index vector together with chi(G) and the check sum(i) == chi.
PoincareHopfReport verify_poincare_hopf(const Graph& g, const Orientation& o, const ComplexOptions& opts = {});

struct FIdentityReport {
    /// f_G(t)
    Polynomial lhs;
    /// 1 + t * sum_v f_{S^-(v)}(t)
    Polynomial rhs;
    bool passed = false;
    /// lhs(-1) = 1 - chi(G) and rhs(-1) = 1 - sum_v i(v); equal iff the
    /// index sum matches chi.
    Rational lhs_at_minus_one;
    Rational rhs_at_minus_one;
};

/// Both sides of the f-function identity as exact polynomials.
FIdentityReport verify_f_identity(const Graph& g, const Orientation& o, const ComplexOptions& opts = {});

} // namespace phcurv
