#include "phcurv/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phcurv/parallel.hpp"

namespace phcurv {

Coloring::Coloring(std::vector<double> values)
    : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw std::invalid_argument("coloring value at vertex " + std::to_string(i) + " is not finite");
}

Coloring Coloring::identity(std::size_t n)
{
    std::vector<double> v(n);
    std::iota(v.begin(), v.end(), 0.0);
    return Coloring(std::move(v));
}

std::vector<Vertex> Coloring::order() const
{
    std::vector<Vertex> out(values_.size());
    std::iota(out.begin(), out.end(), Vertex{0});
    std::sort(out.begin(), out.end(), [this](Vertex a, Vertex b) { return precedes(a, b); });
    return out;
}

NotIrrotational::NotIrrotational(const Triangle& witness)
    : std::domain_error("orientation has a cyclic triangle (" + std::to_string(witness[0]) + "," + std::to_string(witness[1]) +
                        "," + std::to_string(witness[2]) + "); the index is undefined")
    , witness_(witness)
{
}

namespace {

std::optional<Triangle> scan_cyclic(const Graph& g, const Orientation& o)
{
    // Triangles a<b<c in lexicographic order; the first cyclic one is the smallest.
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a)
                continue;
            const bool ab = o.points_to(a, b);
            for (Vertex c : g.neighbors(b)) {
                if (c <= b || !g.adjacent(a, c))
                    continue;
                const bool bc = o.points_to(b, c);
                const bool ca = o.points_to(c, a);
                if ((ab && bc && ca) || (!ab && !bc && !ca))
                    return Triangle{a, b, c};
            }
        }
    }
    return std::nullopt;
}

void require_irrotational(const Orientation& o)
{
    if (!o.irrotational())
        throw NotIrrotational(*o.cyclic_witness());
}

void require_compatible(const Graph& g, const Orientation& o)
{
    if (g.vertex_count() != o.vertex_count())
        throw std::invalid_argument("orientation is defined on " + std::to_string(o.vertex_count()) +
                                    " vertices but the graph has " + std::to_string(g.vertex_count()));
}

} // namespace

Orientation::Orientation(const Graph& g, std::vector<bits::Word> in)
    : n_(g.vertex_count())
    , words_(g.words_per_row())
    , in_(std::move(in))
{
    witness_ = scan_cyclic(g, *this);
}

Orientation Orientation::from_arcs(const Graph& g, std::span<const Edge> arcs)
{
    const std::size_t words = g.words_per_row();
    std::vector<bits::Word> in(g.vertex_count() * words, 0);
    auto in_row = [&](Vertex v) { return std::span<bits::Word>(in.data() + static_cast<std::size_t>(v) * words, words); };
    for (const auto& [tail, head] : arcs) {
        if (tail >= g.vertex_count() || head >= g.vertex_count() || !g.adjacent(tail, head))
            throw std::invalid_argument("arc " + std::to_string(tail) + "->" + std::to_string(head) + " is not an edge of the graph");
        if (bits::test(in_row(head), tail) || bits::test(in_row(tail), head))
            throw std::invalid_argument("edge {" + std::to_string(tail) + "," + std::to_string(head) + "} is directed more than once");
        bits::set(in_row(head), tail);
    }
    if (arcs.size() != g.edge_count())
        throw std::invalid_argument("orientation directs " + std::to_string(arcs.size()) + " edges but the graph has " +
                                    std::to_string(g.edge_count()));
    return Orientation(g, std::move(in));
}

std::vector<Edge> Orientation::arcs(const Graph& g) const
{
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges())
        out.push_back(points_to(u, v) ? Edge{u, v} : Edge{v, u});
    return out;
}

Orientation orient_by_coloring(const Graph& g, const Coloring& c)
{
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " values but the graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
    const std::size_t words = g.words_per_row();
    std::vector<bits::Word> in(g.vertex_count() * words, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::span<bits::Word> row(in.data() + static_cast<std::size_t>(v) * words, words);
        for (Vertex w : g.neighbors(v))
            if (c.precedes(w, v))
                bits::set(row, w);
    }
    Orientation o(g, std::move(in));
    if (!o.irrotational())
        throw std::logic_error("coloring-induced orientation has a cyclic triangle");
    return o;
}

std::optional<Triangle> find_cyclic_triangle(const Graph& g, const Orientation& o)
{
    require_compatible(g, o);
    return scan_cyclic(g, o);
}

Subgraph exit_set(const Graph& g, const Orientation& o, Vertex v)
{
    require_compatible(g, o);
    check_vertex(g, v);
    require_irrotational(o);
    std::vector<Vertex> members;
    bits::for_each(o.in_row(v), [&](std::size_t w) { members.push_back(static_cast<Vertex>(w)); });
    return induced_subgraph(g, std::move(members));
}

std::int64_t ph_index(const Graph& g, const Orientation& o, Vertex v, const ComplexOptions& opts)
{
    const Subgraph s = exit_set(g, o, v);
    return to_int64(1 - euler_characteristic(whitney_complex(s.graph, opts)));
}

BigInt IndexVector::total() const
{
    BigInt sum = 0;
    for (auto i : values)
        sum += i;
    return sum;
}

IndexVector index_vector(const Graph& g, const Orientation& o, unsigned threads)
{
    require_compatible(g, o);
    require_irrotational(o);
    IndexVector out;
    out.values.resize(g.vertex_count());
    parallel_blocks(g.vertex_count(), threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v)
            out.values[v] = 1 - induced_euler_characteristic(g, o.in_row(static_cast<Vertex>(v)));
    });
    return out;
}

PoincareHopfReport verify_poincare_hopf(const Graph& g, const Orientation& o, const ComplexOptions& opts)
{
    PoincareHopfReport r;
    r.indices = index_vector(g, o, opts.threads);
    r.chi = euler_characteristic(count_simplices(g, opts));
    r.passed = r.indices.total() == r.chi;
    return r;
}

FIdentityReport verify_f_identity(const Graph& g, const Orientation& o, const ComplexOptions& opts)
{
    require_compatible(g, o);
    require_irrotational(o);
    FIdentityReport r;
    r.lhs = f_function(count_simplices(g, opts));
    Polynomial sum;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        sum += f_function(count_simplices(exit_set(g, o, v).graph, opts));
    r.rhs = Polynomial::constant(1) + Polynomial::t() * sum;
    r.passed = r.lhs == r.rhs;
    r.lhs_at_minus_one = r.lhs.evaluate(-1);
    r.rhs_at_minus_one = r.rhs.evaluate(-1);
    return r;
}

} // namespace phcurv
