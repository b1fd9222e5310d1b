#include "phcurv/morse2d.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace phcurv::morse2d {

std::string_view to_string(Kind k)
{
    switch (k) {
    case Kind::source:
        return "source";
    case Kind::sink:
        return "sink";
    case Kind::regular:
        return "regular";
    case Kind::saddle:
        return "saddle";
    }
    return "unknown";
}

namespace {

bool sphere_is_cycle(const Graph& sphere)
{
    const std::size_t n = sphere.vertex_count();
    if (n < 4 || sphere.edge_count() != n)
        return false;
    for (Vertex v = 0; v < n; ++v)
        if (sphere.degree(v) != 2)
            return false;
    // Connected: walk around the cycle from vertex 0.
    Vertex prev = 0;
    Vertex cur = sphere.neighbors(0)[0];
    std::size_t steps = 1;
    while (cur != 0) {
        const auto& nb = sphere.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == n;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n)
        : parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

TwoGraphCheck is_two_graph(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!sphere_is_cycle(unit_sphere(g, v).graph))
            return {false, v};
    return {};
}

VertexClass classify_vertex(const Graph& g, const Orientation& o, Vertex v)
{
    check_vertex(g, v);
    const Subgraph sphere = unit_sphere(g, v);
    if (!sphere_is_cycle(sphere.graph))
        throw std::invalid_argument("unit sphere of vertex " + std::to_string(v) + " is not a cycle of length >= 4");
    if (!o.irrotational())
        throw NotIrrotational(*o.cyclic_witness());

    const std::size_t len = sphere.graph.vertex_count();
    std::vector<char> incoming(len, 0);
    std::size_t in_count = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (o.points_to(sphere.parent_ids[i], v)) {
            incoming[i] = 1;
            ++in_count;
        }
    }

    DisjointSets sets(len);
    std::size_t components = in_count;
    std::size_t in_edges = 0;
    for (const auto& [a, b] : sphere.graph.edges()) {
        if (incoming[a] && incoming[b]) {
            ++in_edges;
            if (sets.unite(a, b))
                --components;
        }
    }

    VertexClass c;
    c.incoming_components = components;
    if (in_count == 0) {
        c.kind = Kind::source;
        c.index = 1;
    } else if (in_count == len) {
        c.kind = Kind::sink;
        c.index = 1;
    } else {
        // A proper subset of a circle is a disjoint union of arcs (paths).
        if (in_edges + components != in_count)
            throw std::logic_error("incoming part of the sphere of vertex " + std::to_string(v) + " is not a union of arcs");
        c.kind = components == 1 ? Kind::regular : Kind::saddle;
        c.index = 1 - static_cast<std::int64_t>(components);
    }

    const std::int64_t reference = ph_index(g, o, v);
    if (reference != c.index)
        throw std::logic_error("component-count index " + std::to_string(c.index) + " differs from 1 - chi(S^-) = " +
                               std::to_string(reference) + " at vertex " + std::to_string(v));
    return c;
}

Classification classify_all(const Graph& g, const Orientation& o)
{
    const TwoGraphCheck check = is_two_graph(g);
    if (!check.ok)
        throw std::invalid_argument("not a 2-graph: unit sphere of vertex " + std::to_string(*check.first_failure) +
                                    " is not a cycle of length >= 4");
    Classification out;
    out.vertices.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const VertexClass c = classify_vertex(g, o, v);
        switch (c.kind) {
        case Kind::source:
            ++out.sources;
            break;
        case Kind::sink:
            ++out.sinks;
            break;
        case Kind::regular:
            ++out.regular;
            break;
        case Kind::saddle:
            ++out.saddles;
            break;
        }
        out.index_sum += c.index;
        out.vertices.push_back(c);
    }
    out.chi = euler_characteristic(count_simplices(g));
    out.passed = BigInt(out.index_sum) == out.chi;
    return out;
}

} // namespace phcurv::morse2d
