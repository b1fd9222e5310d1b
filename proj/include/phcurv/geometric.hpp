#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "phcurv/curvature.hpp"
#include "phcurv/graph.hpp"
#include "phcurv/orientation.hpp"

namespace phcurv::geometric {

/// Points in R^d stored row-major.
class PointCloud {
public:
    PointCloud() = default;
    /// Throws std::invalid_argument if d == 0, coords.size() is not a multiple
    /// of d, or any coordinate is not finite.
    PointCloud(std::size_t dim, std::vector<double> coords, std::string label);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    const std::vector<double>& coords() const { return coords_; }
    const std::string& label() const { return label_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
    std::string label_;
};

/// n points at angles 2 pi k / n.
PointCloud sample_circle(std::size_t n, double radius = 1.0);

/// Latitude-longitude grid on the unit sphere: `rings` latitude levels from
/// pole to pole (inclusive) and `meridians` longitudes. The two poles are
/// single points, so the count is (rings - 2) * meridians + 2.
PointCloud sample_sphere(std::size_t rings, std::size_t meridians);

/// Grid on the standard torus ((R + r cos phi) cos theta, (R + r cos phi) sin theta, r sin phi),
/// theta_i = 2 pi i / n_major, phi_j = 2 pi j / n_minor. Point (i, j) has index i * n_minor + j.
PointCloud sample_torus(std::size_t n_major, std::size_t n_minor, double major_radius, double minor_radius);

/// Points (sin t, sin t cos t) for t = 2 pi k / n on the curve y^2 - x^2 + x^4 = 0.
/// Parameter values landing on an already-emitted point (the crossing at the
/// origin) are merged.
PointCloud sample_lemniscate(std::size_t n);

/// Tolerance used when merging coincident lemniscate samples.
inline constexpr double kMergeTolerance = 1e-12;

double distance(std::span<const double> a, std::span<const double> b);

/// Largest nearest-neighbour distance over the cloud: the smallest threshold
/// at which no point is isolated.
double nearest_neighbor_spacing(const PointCloud& pc);

/// 1.5 * nearest_neighbor_spacing.
double default_epsilon(const PointCloud& pc);

struct EpsGraphConfig {
    double epsilon = 0.0;
    /// All-pairs below this many points, grid buckets above.
    std::size_t bucket_threshold = 5000;
};

/// Edge {i, j} iff distance(p_i, p_j) < epsilon (strict).
/// Throws std::invalid_argument unless epsilon > 0.
Graph build_eps_graph(const PointCloud& pc, const EpsGraphConfig& cfg);

/// Coloring v -> <u, p_v>. Throws std::invalid_argument if u has the wrong
/// dimension or | |u| - 1 | > 1e-9.
Coloring height_coloring(const PointCloud& pc, std::span<const double> u);

/// Height functions in directions uniform on the unit sphere of R^d, as a measure.
SamplerBacked height_measure(const PointCloud& pc);

/// Monte Carlo index expectation over `directions` uniformly random height functions.
CurvatureVector embedded_curvature(const PointCloud& pc, const Graph& g, std::uint64_t directions, std::uint64_t seed,
                                   unsigned threads = 1);

/// CSV with a `# dim=d` header line followed by one comma-separated point per row.
PointCloud read_point_cloud(std::istream& in, std::string label = "file");
void write_point_cloud(std::ostream& out, const PointCloud& pc);

} // namespace phcurv::geometric
