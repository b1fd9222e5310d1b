#include "phcurv/registry.hpp"

#include <charconv>
#include <stdexcept>

namespace phcurv {

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle graph needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph::from_edges(a + b, edges);
}

Graph octahedron_graph()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 6; ++i)
        for (Vertex j = i + 1; j < 6; ++j)
            if (j != (i ^ 1U))
                edges.emplace_back(i, j);
    return Graph::from_edges(6, edges);
}

Graph icosahedron_graph()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        const Vertex up = 1 + i;
        const Vertex up_next = 1 + (i + 1) % 5;
        const Vertex low = 6 + i;
        const Vertex low_next = 6 + (i + 1) % 5;
        edges.emplace_back(0, up);
        edges.emplace_back(up, up_next);
        edges.emplace_back(up, low);
        edges.emplace_back(up, low_next);
        edges.emplace_back(low, low_next);
        edges.emplace_back(low, 11);
    }
    return Graph::from_edges(12, edges);
}

Graph utility_graph() { return complete_bipartite_graph(3, 3); }

namespace {

std::size_t parse_size(std::string_view family, std::string_view text)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad size '" + std::string(text) + "' for graph family '" + std::string(family) + "'");
    return value;
}

} // namespace

std::optional<Graph> named_graph(std::string_view name)
{
    if (name == "octahedron")
        return octahedron_graph();
    if (name == "icosahedron")
        return icosahedron_graph();
    if (name == "utility")
        return utility_graph();
    const auto colon = name.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    const std::string_view family = name.substr(0, colon);
    const std::string_view arg = name.substr(colon + 1);
    if (family == "cycle")
        return cycle_graph(parse_size(family, arg));
    if (family == "path")
        return path_graph(parse_size(family, arg));
    if (family == "complete")
        return complete_graph(parse_size(family, arg));
    return std::nullopt;
}

std::vector<std::string> registry_names() { return {"cycle:k", "path:k", "complete:k", "octahedron", "icosahedron", "utility"}; }

} // namespace phcurv
