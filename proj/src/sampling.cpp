#include "polycenter/sampling.hpp"

#include <algorithm>
#include <numbers>

#include "polycenter/error.hpp"

namespace polycenter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// n angles in [0, 2 pi) whose consecutive gaps are at least a third of the
// mean gap.
std::vector<double> separated_angles(Rng& rng, std::size_t n) {
    std::vector<double> gaps(n);
    double total = 0.0;
    for (auto& g : gaps) {
        g = 0.5 + uniform(rng, 0.0, 1.0);
        total += g;
    }
    std::vector<double> angles(n);
    double acc = uniform(rng, 0.0, kTwoPi);
    for (std::size_t i = 0; i < n; ++i) {
        angles[i] = acc;
        acc += gaps[i] / total * kTwoPi;
    }
    return angles;
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(uniform(rng, 0.0, static_cast<double>(n)));
}

Polygon random_convex_polygon(Rng& rng, std::size_t n) {
    const auto angles = separated_angles(rng, n);
    // Linear map with singular values in [0.5, 2].
    const double rot1 = uniform(rng, 0.0, kTwoPi);
    const double rot2 = uniform(rng, 0.0, kTwoPi);
    const double s1 = uniform(rng, 0.5, 2.0);
    const double s2 = uniform(rng, 0.5, 2.0);
    const Point2 shift{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    const bool reverse = uniform(rng, 0.0, 1.0) < 0.5;
    std::vector<Point2> pts;
    pts.reserve(n);
    for (double a : angles) {
        Point2 v{std::cos(a), std::sin(a)};
        v = RigidMotion{rot1, {}}(v);
        v = {s1 * v.x, s2 * v.y};
        v = RigidMotion{rot2, shift}(v);
        pts.push_back(v);
    }
    if (reverse) std::reverse(pts.begin(), pts.end());
    return Polygon(std::move(pts));
}

Polygon random_simple_polygon(Rng& rng, std::size_t n) {
    const auto angles = separated_angles(rng, n);
    const Point2 shift{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    std::vector<Point2> pts;
    pts.reserve(n);
    for (double a : angles) {
        const double r = uniform(rng, 0.5, 1.5);
        pts.push_back(Point2{r * std::cos(a), r * std::sin(a)} + shift);
    }
    return Polygon(std::move(pts));
}

Polygon random_polygon(Rng& rng, std::size_t n) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)});
    return Polygon(std::move(pts));
}

Polygon random_equiangular_polygon(Rng& rng, std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidInput, "n must be at least 3");
    std::vector<Point2> dirs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        dirs[i] = {std::cos(a), std::sin(a)};
    }
    // Free lengths for the first n-2 sides; the last two close the polygon.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> len(n);
        Point2 partial{};
        for (std::size_t i = 0; i + 2 < n; ++i) {
            len[i] = uniform(rng, 0.5, 1.5);
            partial += len[i] * dirs[i];
        }
        const Point2 u = dirs[n - 2];
        const Point2 w = dirs[n - 1];
        const double det = wedge(u, w);
        // a u + b w = -partial
        const double a = wedge(-partial, w) / det;
        const double b = wedge(u, -partial) / det;
        if (a < 0.2 || b < 0.2) continue;
        len[n - 2] = a;
        len[n - 1] = b;
        const double rot = uniform(rng, 0.0, kTwoPi);
        const RigidMotion m{rot, {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)}};
        std::vector<Point2> pts;
        pts.reserve(n);
        Point2 cur{};
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(m(cur));
            cur += len[i] * dirs[i];
        }
        return Polygon(std::move(pts));
    }
    throw Error(ErrorKind::InvalidInput, "could not close an equiangular polygon");
}

Polygon regular_polygon(std::size_t n, std::size_t k, double radius, Point2 center, double phase) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = phase + kTwoPi * static_cast<double>(k * i % n) / static_cast<double>(n);
        pts.push_back(center + radius * Point2{std::cos(a), std::sin(a)});
    }
    return Polygon(std::move(pts));
}

RigidMotion random_motion(Rng& rng) {
    return {uniform(rng, -std::numbers::pi, std::numbers::pi),
            {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)}};
}

Similarity random_similarity(Rng& rng) {
    const double scale = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
    return {scale, random_motion(rng)};
}

PolygonSampler convex_sampler(std::size_t n) {
    return [n](Rng& rng) { return random_convex_polygon(rng, n); };
}

PolygonSampler simple_sampler(std::size_t n) {
    return [n](Rng& rng) { return random_simple_polygon(rng, n); };
}

}  // namespace polycenter
