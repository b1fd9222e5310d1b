#pragma once

#include <vector>

#include "phcurv/graph.hpp"

namespace phcurv::testing {

/// Coloring of the registry icosahedron with two maxima (0, 11), two minima
/// (4, 7) and two Morse saddles (3, 5); found by search, checked in the tests
/// against the subset-enumeration oracle.
inline const std::vector<double> kIcosahedronFlow = {10, 9, 1, 5, 4, 7, 3, 0, 2, 6, 8, 11};
inline const std::vector<std::int64_t> kIcosahedronFlowIndices = {1, 0, 0, -1, 1, -1, 0, 1, 0, 0, 0, 1};

/// Double cone over C_k: ring 0..k-1, apexes k (north) and k+1 (south).
/// For k >= 4 every unit sphere is a cycle (C_k at the apexes, C_4 on the ring).
inline Graph bipyramid(std::size_t k)
{
    std::vector<Edge> edges;
    const auto north = static_cast<Vertex>(k);
    const auto south = static_cast<Vertex>(k + 1);
    for (Vertex i = 0; i < k; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
        edges.emplace_back(i, north);
        edges.emplace_back(i, south);
    }
    return Graph::from_edges(k + 2, edges);
}

/// Triangulated m x n torus grid: (i, j) ~ (i+1, j), (i, j+1), (i+1, j+1).
/// Every vertex has degree 6 and, for m, n >= 4, a hexagonal unit sphere.
inline Graph torus_triangulation(std::size_t m, std::size_t n)
{
    std::vector<Edge> edges;
    auto id = [n](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * n + j); };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % m, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % n));
            edges.emplace_back(id(i, j), id((i + 1) % m, (j + 1) % n));
        }
    }
    return Graph::from_edges(m * n, edges);
}

} // namespace phcurv::testing
