#include "polycenter/distance_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "polycenter/error.hpp"

namespace polycenter {

namespace {

constexpr double kResidualTol = 1e-6;
constexpr double kSnapTol = 1e-12;

struct Embedding {
    std::vector<Point2> points;
    double max_residual = 0.0;
    std::optional<std::string> failure;
};

Embedding embed(const DistanceMatrix& d) {
    Embedding out;
    const std::size_t n = d.n();
    const double scale = d.max();
    const double d12 = d(0, 1);
    if (!(d12 > 0.0)) {
        out.failure = "d12 must be positive to anchor the reconstruction";
        return out;
    }

    auto& pts = out.points;
    pts.reserve(n);
    pts.push_back({0.0, 0.0});
    pts.push_back({d12, 0.0});
    for (std::size_t k = 2; k < n; ++k) {
        const double r1 = d(0, k);
        const double r2 = d(1, k);
        const double x = (r1 * r1 - r2 * r2 + d12 * d12) / (2.0 * d12);
        double y2 = r1 * r1 - x * x;
        if (y2 < 0.0) {
            const double slack = kResidualTol * scale;
            if (y2 < -slack * slack) {
                out.failure = "no real trilateration for vertex " + std::to_string(k + 1);
                return out;
            }
            y2 = 0.0;
        }
        double y = std::sqrt(y2);
        if (y < kSnapTol * scale) y = 0.0;

        if (y != 0.0) {
            // Pick the mirror image that best reproduces the distances to the
            // vertices placed so far.
            double err_up = 0.0;
            double err_down = 0.0;
            for (std::size_t j = 2; j < k; ++j) {
                const double target = d(j, k);
                const double up = distance(pts[j], {x, y}) - target;
                const double down = distance(pts[j], {x, -y}) - target;
                err_up += up * up;
                err_down += down * down;
            }
            if (err_down < err_up) y = -y;
        }
        pts.push_back({x, y});
    }

    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) twice_area += wedge(pts[i], pts[(i + 1) % n]);
    if (twice_area > 0.0)
        for (auto& p : pts) p.y = -p.y;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.max_residual = std::max(out.max_residual, std::abs(distance(pts[i], pts[j]) - d(i, j)));
    if (out.max_residual > kResidualTol * scale)
        out.failure = "distances are inconsistent with a planar embedding (residual " +
                      std::to_string(out.max_residual) + ")";
    return out;
}

}  // namespace

ReconstructionResult reconstruct(const DistanceMatrix& d) {
    if (d.n() < 3) throw Error(ErrorKind::InvalidInput, "reconstruction needs n >= 3");
    auto e = embed(d);
    if (e.failure) throw Error(ErrorKind::InfeasibleDistances, *e.failure);
    return {Polygon(std::move(e.points)), e.max_residual};
}

FeasibilityReport validate(const DistanceMatrix& d) {
    FeasibilityReport report;
    const std::size_t n = d.n();
    if (n >= 3) {
        const auto e = embed(d);
        report.feasible = !e.failure.has_value();
        report.max_residual =
            e.points.size() == n ? e.max_residual : std::numeric_limits<double>::infinity();
    }
    const double scale = d.max();
    const double norm6 = scale > 0.0 ? std::pow(scale, 6) : 1.0;
    for (std::size_t j = 2; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            report.cm_checks.push_back(cayley_menger(d, {0, 1, j, k}) / norm6);
    return report;
}

}  // namespace polycenter
