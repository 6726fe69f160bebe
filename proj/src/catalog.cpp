#include "polycenter/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "polycenter/error.hpp"

namespace polycenter {

namespace {

constexpr double kTieTol = 1e-10;

std::vector<double> distance_sums(const Polygon& p) {
    std::vector<double> sums(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j) sums[i] += distance(p[i], p[j]);
    return sums;
}

void require_convex(const Polygon& p, const char* what) {
    if (!is_convex(p)) throw Error(ErrorKind::DomainViolation, std::string(what) + " requires a convex polygon");
}

}  // namespace

VertexCenterFunction centroid_function() {
    return VertexCenterFunction("centroid", [](const Polygon&) { return 1.0; });
}

LengthCenterFunction perimeter_function() {
    return LengthCenterFunction(
        "perimeter", [](const DistanceMatrix& d) { return d(d.n() - 1, 0) + d(0, 1); }, guards::convex_matrix());
}

VertexCenterFunction lamina_function() {
    return VertexCenterFunction(
        "lamina",
        [](const Polygon& p) {
            const std::size_t n = p.size();
            const Point2 b = centroid_vertices(p);
            auto fan = [&](std::size_t i) { return std::abs(wedge(b - p[i], b - p[(i + 1) % n])); };
            double total = 0.0;
            for (std::size_t j = 0; j < n; ++j) total += fan(j);
            return fan(0) + fan(n - 1) + total / static_cast<double>(n);
        },
        guards::convex());
}

VertexCenterFunction medoid_function() {
    return VertexCenterFunction(
        "medoid",
        [](const Polygon& p) {
            const auto sums = distance_sums(p);
            const double best = *std::min_element(sums.begin(), sums.end());
            return sums[0] <= best + kTieTol * diameter(p) ? 1.0 : 0.0;
        },
        guards::nondegenerate());
}

LengthCenterFunction circumcenter_function() {
    return LengthCenterFunction(
        "circumcenter",
        [](const DistanceMatrix& d) {
            const double a2 = d(1, 2) * d(1, 2);
            const double b2 = d(2, 0) * d(2, 0);
            const double c2 = d(0, 1) * d(0, 1);
            return a2 * (b2 + c2 - a2);
        },
        guards::matrix_size(3));
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"centroid", CenterKind::VertexBased, centroid_function(), "any polygon"},
        {"perimeter", CenterKind::LengthBased, perimeter_function(), "convex polygons"},
        {"lamina", CenterKind::VertexBased, lamina_function(), "convex polygons"},
        {"medoid", CenterKind::VertexBased, medoid_function(), "non-degenerate polygons"},
        {"circumcenter", CenterKind::LengthBased, circumcenter_function(), "triangles"},
    };
    return entries;
}

std::optional<CatalogEntry> find_center(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

Point2 centroid_vertices(const Polygon& p) {
    Point2 sum{};
    for (const auto& v : p) sum += v;
    return sum / static_cast<double>(p.size());
}

Point2 perimeter_centroid(const Polygon& p) {
    require_convex(p, "perimeter centroid");
    const std::size_t n = p.size();
    std::vector<double> side(n);
    double perimeter = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        side[i] = distance(p[i], p.at_cyclic(i + 1));
        perimeter += side[i];
    }
    Point2 out{};
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (side[(i + n - 1) % n] + side[i]) / (2.0 * perimeter);
        out += w * p[i];
    }
    return out;
}

Point2 lamina_centroid(const Polygon& p) {
    require_convex(p, "lamina centroid");
    return geometric_center(lamina_function(), p);
}

Point2 lamina_centroid_direct(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = wedge(p[i], p.at_cyclic(i + 1));
        total += w[i];
    }
    const double d = diameter(p);
    if (std::abs(total) <= 1e-12 * d * d) throw Error(ErrorKind::ZeroArea, "polygon has zero shoelace area");
    Point2 out{};
    for (std::size_t i = 0; i < n; ++i) out += (w[(i + n - 1) % n] + w[i]) / (3.0 * total) * p[i];
    return out;
}

std::size_t medoid(const Polygon& p) {
    if (!classify(p).nondegenerate)
        throw Error(ErrorKind::DomainViolation, "medoid requires a non-degenerate polygon");
    const auto sums = distance_sums(p);
    const auto best = static_cast<std::size_t>(std::min_element(sums.begin(), sums.end()) - sums.begin());
    const double tol = kTieTol * diameter(p);
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (i != best && sums[i] <= sums[best] + tol)
            throw Error(ErrorKind::Tie, "medoid is not unique: vertices " + std::to_string(best + 1) + " and " +
                                            std::to_string(i + 1) + " tie");
    return best;
}

Point2 triangle_circumcenter(const Polygon& p) {
    if (p.size() != 3) throw Error(ErrorKind::DomainViolation, "circumcenter requires a triangle");
    const double d = diameter(p);
    if (std::abs(signed_area(p)) <= 1e-12 * d * d)
        throw Error(ErrorKind::Collinear, "triangle vertices are collinear");
    auto sq = [](Point2 u) { return dot(u, u); };
    const double a2 = sq(p[1] - p[2]);
    const double b2 = sq(p[2] - p[0]);
    const double c2 = sq(p[0] - p[1]);
    const double wa = a2 * (b2 + c2 - a2);
    const double wb = b2 * (c2 + a2 - b2);
    const double wc = c2 * (a2 + b2 - c2);
    const double sum = wa + wb + wc;
    return (wa * p[0] + wb * p[1] + wc * p[2]) / sum;
}

double circumcenter_trilinear(double a, double b, double c) { return a * (b * b + c * c - a * a); }

std::vector<double> trilinear_to_barycentric(const std::vector<double>& t, double a, double b, double c) {
    if (t.size() != 3) throw Error(ErrorKind::InvalidInput, "trilinear coordinates need 3 entries");
    return {a * t[0], b * t[1], c * t[2]};
}

}  // namespace polycenter
