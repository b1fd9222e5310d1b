#include "phcurv/geometric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/random/uniform_on_sphere.hpp>

namespace phcurv::geometric {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, std::string label)
    : dim_(dim)
    , coords_(std::move(coords))
    , label_(std::move(label))
{
    if (dim_ == 0)
        throw std::invalid_argument("point cloud dimension must be at least 1");
    if (coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate count is not a multiple of the dimension");
    for (double x : coords_)
        if (!std::isfinite(x))
            throw std::invalid_argument("point cloud has a non-finite coordinate");
}

PointCloud sample_circle(std::size_t n, double radius)
{
    if (n < 3)
        throw std::invalid_argument("circle sampling needs at least 3 points");
    if (!(radius > 0))
        throw std::invalid_argument("circle radius must be positive");
    std::vector<double> c;
    c.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        c.push_back(radius * std::cos(t));
        c.push_back(radius * std::sin(t));
    }
    return PointCloud(2, std::move(c), "circle");
}

PointCloud sample_sphere(std::size_t rings, std::size_t meridians)
{
    if (rings < 3 || meridians < 3)
        throw std::invalid_argument("sphere sampling needs at least 3 rings and 3 meridians");
    std::vector<double> c;
    c.reserve(3 * ((rings - 2) * meridians + 2));
    c.insert(c.end(), {0.0, 0.0, 1.0});
    for (std::size_t i = 1; i + 1 < rings; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(rings - 1);
        for (std::size_t j = 0; j < meridians; ++j) {
            const double phi = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(meridians);
            c.push_back(std::sin(theta) * std::cos(phi));
            c.push_back(std::sin(theta) * std::sin(phi));
            c.push_back(std::cos(theta));
        }
    }
    c.insert(c.end(), {0.0, 0.0, -1.0});
    return PointCloud(3, std::move(c), "sphere");
}

PointCloud sample_torus(std::size_t n_major, std::size_t n_minor, double major_radius, double minor_radius)
{
    if (n_major < 3 || n_minor < 3)
        throw std::invalid_argument("torus sampling needs at least 3 steps in each direction");
    if (!(minor_radius > 0) || !(minor_radius < major_radius))
        throw std::invalid_argument("torus radii must satisfy 0 < r < R");
    std::vector<double> c;
    c.reserve(3 * n_major * n_minor);
    for (std::size_t i = 0; i < n_major; ++i) {
        const double theta = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_major);
        for (std::size_t j = 0; j < n_minor; ++j) {
            const double phi = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_minor);
            const double ring = major_radius + minor_radius * std::cos(phi);
            c.push_back(ring * std::cos(theta));
            c.push_back(ring * std::sin(theta));
            c.push_back(minor_radius * std::sin(phi));
        }
    }
    return PointCloud(3, std::move(c), "torus");
}

PointCloud sample_lemniscate(std::size_t n)
{
    if (n < 8)
        throw std::invalid_argument("lemniscate sampling needs at least 8 points");
    std::vector<double> c;
    // Emitted points keyed by x, for the duplicate lookup.
    std::multimap<double, std::size_t> by_x;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const double x = std::sin(t);
        const double y = std::sin(t) * std::cos(t);
        bool duplicate = false;
        for (auto it = by_x.lower_bound(x - kMergeTolerance); it != by_x.end() && it->first <= x + kMergeTolerance; ++it) {
            if (std::abs(c[2 * it->second + 1] - y) <= kMergeTolerance) {
                duplicate = true;
                break;
            }
        }
        if (duplicate)
            continue;
        by_x.emplace(x, c.size() / 2);
        c.push_back(x);
        c.push_back(y);
    }
    return PointCloud(2, std::move(c), "lemniscate");
}

double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double nearest_neighbor_spacing(const PointCloud& pc)
{
    if (pc.size() < 2)
        throw std::invalid_argument("nearest-neighbour spacing needs at least two points");
    double worst = 0;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < pc.size(); ++j)
            if (j != i)
                best = std::min(best, distance(pc.point(i), pc.point(j)));
        worst = std::max(worst, best);
    }
    return worst;
}

double default_epsilon(const PointCloud& pc) { return 1.5 * nearest_neighbor_spacing(pc); }

namespace {

std::vector<Edge> all_pairs_edges(const PointCloud& pc, double eps)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pc.size(); ++i)
        for (std::size_t j = i + 1; j < pc.size(); ++j)
            if (distance(pc.point(i), pc.point(j)) < eps)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return edges;
}

std::vector<Edge> bucketed_edges(const PointCloud& pc, double eps)
{
    const std::size_t d = pc.dim();
    using Cell = std::vector<std::int64_t>;
    std::map<Cell, std::vector<std::size_t>> cells;
    Cell key(d);
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        for (std::size_t k = 0; k < d; ++k)
            key[k] = static_cast<std::int64_t>(std::floor(p[k] / eps));
        cells[key].push_back(i);
    }
    std::size_t offsets = 1;
    for (std::size_t k = 0; k < d; ++k)
        offsets *= 3;
    std::vector<Edge> edges;
    Cell other(d);
    for (const auto& [cell, members] : cells) {
        for (std::size_t code = 0; code < offsets; ++code) {
            std::size_t rest = code;
            for (std::size_t k = 0; k < d; ++k) {
                other[k] = cell[k] + static_cast<std::int64_t>(rest % 3) - 1;
                rest /= 3;
            }
            const auto it = cells.find(other);
            if (it == cells.end())
                continue;
            for (std::size_t i : members)
                for (std::size_t j : it->second)
                    if (i < j && distance(pc.point(i), pc.point(j)) < eps)
                        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

Graph build_eps_graph(const PointCloud& pc, const EpsGraphConfig& cfg)
{
    if (!(cfg.epsilon > 0) || !std::isfinite(cfg.epsilon))
        throw std::invalid_argument("epsilon must be a positive finite number");
    const auto edges = pc.size() > cfg.bucket_threshold ? bucketed_edges(pc, cfg.epsilon) : all_pairs_edges(pc, cfg.epsilon);
    return Graph::from_edges(pc.size(), edges);
}

Coloring height_coloring(const PointCloud& pc, std::span<const double> u)
{
    if (u.size() != pc.dim())
        throw std::invalid_argument("direction has dimension " + std::to_string(u.size()) + " but the cloud has " +
                                    std::to_string(pc.dim()));
    double norm2 = 0;
    for (double x : u)
        norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("height direction must be a unit vector");
    std::vector<double> values(pc.size());
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        double h = 0;
        for (std::size_t k = 0; k < u.size(); ++k)
            h += u[k] * p[k];
        values[i] = h;
    }
    return Coloring(std::move(values));
}

SamplerBacked height_measure(const PointCloud& pc)
{
    SamplerBacked m;
    m.label = "height functions, directions uniform on the unit sphere";
    m.draw = [cloud = std::make_shared<const PointCloud>(pc)](CounterRng& rng) {
        boost::random::uniform_on_sphere<double> direction(static_cast<int>(cloud->dim()));
        const std::vector<double> u = direction(rng);
        return height_coloring(*cloud, u);
    };
    return m;
}

CurvatureVector embedded_curvature(const PointCloud& pc, const Graph& g, std::uint64_t directions, std::uint64_t seed,
                                   unsigned threads)
{
    if (directions == 0)
        throw std::invalid_argument("embedded curvature needs at least one direction");
    if (g.vertex_count() != pc.size())
        throw std::invalid_argument("graph and point cloud have different vertex counts");
    return mc_curvature(g, height_measure(pc), directions, seed, threads);
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

PointCloud read_point_cloud(std::istream& in, std::string label)
{
    std::string line;
    std::size_t dim = 0;
    std::size_t line_no = 0;
    std::vector<double> coords;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view s = trim(line);
        if (s.empty())
            continue;
        if (s.front() == '#') {
            const auto pos = s.find("dim=");
            if (dim == 0 && pos != std::string_view::npos) {
                const std::string_view num = trim(s.substr(pos + 4));
                const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), dim);
                if (ec != std::errc() || ptr != num.data() + num.size() || dim == 0)
                    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad dimension header");
            }
            continue;
        }
        if (dim == 0)
            throw std::invalid_argument("point cloud is missing the '# dim=d' header");
        std::size_t fields = 0;
        std::string_view rest = s;
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view field = trim(rest.substr(0, comma));
            double x = 0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
            if (ec != std::errc() || ptr != field.data() + field.size())
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad coordinate '" + std::string(field) + "'");
            coords.push_back(x);
            ++fields;
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (fields != dim)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                                        " coordinates, got " + std::to_string(fields));
    }
    if (dim == 0)
        throw std::invalid_argument("point cloud is missing the '# dim=d' header");
    return PointCloud(dim, std::move(coords), std::move(label));
}

void write_point_cloud(std::ostream& out, const PointCloud& pc)
{
    out << "# dim=" << pc.dim() << '\n';
    char buf[64];
    for (std::size_t i = 0; i < pc.size(); ++i) {
        const auto p = pc.point(i);
        for (std::size_t k = 0; k < p.size(); ++k) {
            const auto r = std::to_chars(buf, buf + sizeof buf, p[k]);
            if (k > 0)
                out << ',';
            out.write(buf, r.ptr - buf);
        }
        out << '\n';
    }
}

} // namespace phcurv::geometric
