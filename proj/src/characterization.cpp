#include "polycenter/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polycenter/error.hpp"

namespace polycenter {

namespace {

double relative_range(const std::vector<double>& v, double floor) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    double biggest = floor;
    for (double x : v) biggest = std::max(biggest, std::abs(x));
    if (*hi == *lo) return 0.0;
    return (*hi - *lo) / biggest;
}

}  // namespace

CoincidenceReport coincidence(const CenterFunction& f, const Polygon& p, double tol, double scale_floor) {
    CoincidenceReport r;
    if (const auto* vf = std::get_if<VertexCenterFunction>(&f)) {
        if (!vf->accepts(p))
            throw Error(ErrorKind::DomainViolation, vf->name() + " requires a " + vf->guard().description);
        for (std::size_t k = 0; k < p.size(); ++k) r.values.push_back(vf->evaluate_unchecked(cyclic_shift(p, k)));
    } else {
        const auto& g = std::get<LengthCenterFunction>(f);
        const auto d = distance_matrix(p);
        if (!g.accepts(d))
            throw Error(ErrorKind::DomainViolation, g.name() + " requires a " + g.guard().description);
        for (std::size_t k = 0; k < p.size(); ++k) r.values.push_back(g.evaluate_unchecked(d.shifted(k)));
    }
    r.spread = relative_range(r.values, scale_floor);
    r.coincident = r.spread <= tol;
    return r;
}

double f1_cosine(const Polygon& p) {
    const Point2 u = p[1] - p[0];
    const Point2 v = p[p.size() - 1] - p[0];
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) throw Error(ErrorKind::DegenerateVertex, "zero-length edge at V1");
    return dot(u, v) / (nu * nv);
}

double f2_odd(const Polygon& p) {
    const std::size_t n = p.size();
    if (n % 2 == 0) throw Error(ErrorKind::ParityMismatch, "f2 needs an odd number of vertices");
    // 1-based (n+1)/2 and (n+3)/2
    return distance(p[(n + 1) / 2 - 1], p[(n + 3) / 2 - 1]);
}

double f3_even(const Polygon& p) {
    const std::size_t n = p.size();
    if (n % 2 != 0) throw Error(ErrorKind::ParityMismatch, "f3 needs an even number of vertices");
    // 1-based n/2 and n/2 + 2
    return distance(p[n / 2 - 1], p[(n / 2 + 2 - 1) % n]);
}

VertexCenterFunction cosine_function() {
    return VertexCenterFunction("cosine", f1_cosine, guards::nondegenerate());
}

VertexCenterFunction odd_side_function() {
    return VertexCenterFunction("odd-side", f2_odd,
                                {"polygon with an odd number of vertices", [](const Polygon& p) { return p.size() % 2 == 1; }});
}

VertexCenterFunction even_diagonal_function() {
    return VertexCenterFunction("even-diagonal", f3_even,
                                {"polygon with an even number of vertices", [](const Polygon& p) { return p.size() % 2 == 0; }});
}

std::vector<double> interior_angles(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<double> turn(n);
    std::vector<double> unsigned_angle(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 in = p[i] - p.at_cyclic(static_cast<std::ptrdiff_t>(i) - 1);
        const Point2 out = p.at_cyclic(i + 1) - p[i];
        turn[i] = std::atan2(wedge(in, out), dot(in, out));
        total += turn[i];
        const Point2 back = -in;
        unsigned_angle[i] = std::atan2(std::abs(wedge(back, out)), dot(back, out));
    }
    // total is 2 pi times the turning number
    if (std::abs(total) < std::numbers::pi) return unsigned_angle;
    const double orient = total > 0.0 ? 1.0 : -1.0;
    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) angles[i] = std::numbers::pi - orient * turn[i];
    return angles;
}

PolygonPredicates predicates(const Polygon& p, double tol) {
    if (!classify(p).nondegenerate)
        throw Error(ErrorKind::DomainViolation, "predicates require a non-degenerate polygon");
    std::vector<double> sides(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) sides[i] = distance(p[i], p.at_cyclic(i + 1));
    PolygonPredicates r;
    r.equilateral = relative_range(sides, 0.0) <= tol;
    r.equiangular = relative_range(interior_angles(p), 0.0) <= tol;
    r.regular = r.equilateral && r.equiangular;
    return r;
}

bool in_rectangle_family(const Polygon& p, double tol) {
    if (p.size() != 4) return false;
    auto close = [tol](double a, double b) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); };
    return close(distance(p[0], p[1]), distance(p[2], p[3])) && close(distance(p[1], p[2]), distance(p[3], p[0])) &&
           close(distance(p[0], p[2]), distance(p[1], p[3]));
}

CharacterizationReport characterize(const Polygon& p, const CharacterizationTolerances& tol) {
    const auto cls = classify(p);
    if (!cls.nondegenerate)
        throw Error(ErrorKind::DomainViolation, "characterization requires a non-degenerate polygon");
    const std::size_t n = p.size();

    CharacterizationReport r;
    const auto pred = predicates(p, tol.oracle);
    r.equiangular = pred.equiangular;
    r.equilateral = pred.equilateral;
    r.regular = pred.regular;
    r.convex = cls.convex;

    r.f1 = coincidence(cosine_function(), p, tol.coincidence, 1.0);
    r.f1_coincident = r.f1.coincident;
    if (n % 2 == 1) {
        r.f2 = coincidence(odd_side_function(), p, tol.coincidence);
        r.f2_coincident = r.f2->coincident;
    } else {
        r.f3 = coincidence(even_diagonal_function(), p, tol.coincidence);
        r.f3_coincident = r.f3->coincident;
    }
    if (n == 4) r.rectangle_family = in_rectangle_family(p, tol.oracle);

    if (r.convex && r.f1_coincident != r.equiangular)
        r.inconsistencies.push_back("convex polygon: cosine coincidence disagrees with equiangularity");
    if (r.f2_coincident && *r.f2_coincident != r.equilateral)
        r.inconsistencies.push_back("odd n: opposite-side coincidence disagrees with equilaterality");
    if (r.rectangle_family.value_or(false) && !r.f3_coincident.value_or(false))
        r.inconsistencies.push_back("rectangle-family member without diagonal coincidence");
    if (r.convex && n % 2 == 1 && (r.f1_coincident && *r.f2_coincident) != r.regular)
        r.inconsistencies.push_back("convex odd n: cosine and side coincidence disagree with regularity");
    r.consistent_with_theorems = r.inconsistencies.empty();
    return r;
}

}  // namespace polycenter
