#include "phcurv/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phcurv {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g;
    g.n_ = n;
    g.words_ = bits::words_for(n);
    g.bits_.assign(n * g.words_, 0);
    g.adj_.resize(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                                        std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        std::span<bits::Word> ru(g.bits_.data() + static_cast<std::size_t>(u) * g.words_, g.words_);
        if (bits::test(ru, v))
            continue;
        bits::set(ru, v);
        bits::set(std::span<bits::Word>(g.bits_.data() + static_cast<std::size_t>(v) * g.words_, g.words_), u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for a graph with " +
                                std::to_string(g.vertex_count()) + " vertices");
}

Subgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices)
        check_vertex(g, v);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    Subgraph out;
    out.graph = Graph::from_edges(vertices.size(), edges);
    out.parent_ids = std::move(vertices);
    return out;
}

std::pair<std::vector<Vertex>, std::size_t> degeneracy_order(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }
    // Bucket queue keyed by current degree; stale entries are skipped on pop.
    std::vector<std::vector<Vertex>> buckets(max_degree + 1);
    for (Vertex v = n; v-- > 0;)
        buckets[degree[v]].push_back(v);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    std::size_t degeneracy = 0;
    std::size_t current = 0;
    while (order.size() < n) {
        current = current > 0 ? current - 1 : 0;
        while (buckets[current].empty())
            ++current;
        const Vertex v = buckets[current].back();
        buckets[current].pop_back();
        if (removed[v] || degree[v] != current)
            continue;
        removed[v] = 1;
        order.push_back(v);
        degeneracy = std::max(degeneracy, current);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            --degree[w];
            buckets[degree[w]].push_back(w);
        }
    }
    return {std::move(order), degeneracy};
}

Graph relabel(const Graph& g, std::span<const Vertex> order)
{
    std::vector<Vertex> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges = g.edges();
    for (auto& [u, v] : edges) {
        u = position[u];
        v = position[v];
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

} // namespace phcurv
