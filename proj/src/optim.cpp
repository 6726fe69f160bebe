#include "polycenter/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polycenter/catalog.hpp"
#include "polycenter/sampling.hpp"

namespace polycenter {

namespace {

// Sum over j != skip of (V_j - x) / |V_j - x|.
Point2 unit_vector_sum(const Polygon& p, Point2 x, std::optional<std::size_t> skip = std::nullopt) {
    Point2 r{};
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (skip && *skip == j) continue;
        const Point2 u = p[j] - x;
        r += u / norm(u);
    }
    return r;
}

// Weiszfeld map over the vertices other than skip.
Point2 weiszfeld_step(const Polygon& p, Point2 x, std::optional<std::size_t> skip = std::nullopt) {
    Point2 num{};
    double den = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (skip && *skip == j) continue;
        const double w = 1.0 / distance(p[j], x);
        num += w * p[j];
        den += w;
    }
    return num / den;
}

}  // namespace

double sum_of_distances(const Polygon& p, Point2 x) {
    double s = 0.0;
    for (const auto& v : p) s += distance(v, x);
    return s;
}

MedianResult geometric_median(const Polygon& p, const MedianOptions& options) {
    if (!(options.tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tol must be positive");
    if (!classify(p).nondegenerate)
        throw Error(ErrorKind::DomainViolation, "geometric median requires a non-degenerate polygon");
    const double snap = 1e-12 * diameter(p);

    MedianResult result;
    // Subgradient test: V_k is the minimizer iff the unit vectors towards the
    // other vertices sum to a vector of length at most 1.
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double r = norm(unit_vector_sum(p, p[k], k));
        if (r <= 1.0) {
            result.point = p[k];
            result.residual = r;
            result.at_vertex = k;
            result.objective_history.push_back(sum_of_distances(p, p[k]));
            return result;
        }
    }

    Point2 x = centroid_vertices(p);
    result.objective_history.push_back(sum_of_distances(p, x));
    for (std::size_t it = 0;; ++it) {
        std::optional<std::size_t> landed;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (distance(p[k], x) <= snap) landed = k;

        Point2 next;
        if (landed) {
            const Point2 r = unit_vector_sum(p, p[*landed], landed);
            const double rn = norm(r);
            if (rn <= 1.0) {
                result.point = p[*landed];
                result.residual = rn;
                result.at_vertex = landed;
                result.iterations = it;
                return result;
            }
            next = (1.0 - 1.0 / rn) * weiszfeld_step(p, p[*landed], landed) + (1.0 / rn) * p[*landed];
        } else {
            result.residual = norm(unit_vector_sum(p, x));
            if (result.residual <= options.tol) {
                result.point = x;
                result.iterations = it;
                return result;
            }
            next = weiszfeld_step(p, x);
        }
        if (it >= options.max_iter) {
            result.point = x;
            result.iterations = it;
            throw NoConvergence("geometric median did not converge in " + std::to_string(options.max_iter) +
                                    " iterations",
                                result);
        }
        x = next;
        result.objective_history.push_back(sum_of_distances(p, x));
    }
}

namespace {

EnclosingCircle circle_from(const Polygon& p, std::size_t a, std::size_t b) {
    const Point2 c = 0.5 * (p[a] + p[b]);
    return {c, std::max(distance(c, p[a]), distance(c, p[b])), {a, b}};
}

EnclosingCircle circle_from(const Polygon& p, std::size_t a, std::size_t b, std::size_t c) {
    const Point2 A = p[a];
    const Point2 B = p[b] - A;
    const Point2 C = p[c] - A;
    const double d = 2.0 * wedge(B, C);
    const double scale = std::max({norm(B), norm(C), norm(B - C)});
    if (std::abs(d) <= 1e-14 * scale * scale) {
        // Collinear: the farthest pair spans the circle.
        EnclosingCircle best = circle_from(p, a, b);
        for (auto cand : {circle_from(p, a, c), circle_from(p, b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double b2 = dot(B, B);
    const double c2 = dot(C, C);
    const Point2 u{(C.y * b2 - B.y * c2) / d, (B.x * c2 - C.x * b2) / d};
    const Point2 center = A + u;
    const double r = std::max({distance(center, p[a]), distance(center, p[b]), distance(center, p[c])});
    return {center, r, {a, b, c}};
}

}  // namespace

EnclosingCircle chebyshev_center(const Polygon& p, std::uint64_t seed) {
    const std::size_t n = p.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_index(rng, i + 1)]);

    const double eps = 1e-13 * diameter(p);
    auto inside = [&](const EnclosingCircle& c, std::size_t i) { return distance(c.center, p[i]) <= c.radius + eps; };

    EnclosingCircle c{p[order[0]], 0.0, {order[0]}};
    for (std::size_t i = 1; i < n; ++i) {
        if (inside(c, order[i])) continue;
        c = {p[order[i]], 0.0, {order[i]}};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(c, order[j])) continue;
            c = circle_from(p, order[i], order[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (inside(c, order[k])) continue;
                c = circle_from(p, order[i], order[j], order[k]);
            }
        }
    }
    std::sort(c.support.begin(), c.support.end());
    return c;
}

double check_minimal_center(MinimalCenterKind kind, const Polygon& p, Point2 candidate, std::size_t trials,
                            std::uint64_t seed) {
    auto solve = [kind](const Polygon& q) -> Point2 {
        if (kind == MinimalCenterKind::Chebyshev) return chebyshev_center(q).center;
        try {
            return geometric_median(q).point;
        } catch (const NoConvergence& e) {
            return e.best().point;
        }
    };
    const double diam = diameter(p);
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
        DihedralElement alpha = DihedralElement::identity(p.size());
        double lambda = 1.0;
        RigidMotion motion{};
        if (t > 0) {
            alpha = DihedralElement(p.size(), uniform_index(rng, p.size()), uniform(rng, 0.0, 1.0) < 0.5);
            lambda = std::exp(uniform(rng, std::log(0.2), std::log(5.0)));
            motion = random_motion(rng);
        }
        const Similarity s(lambda, motion);
        const Point2 solved = solve(apply_motion(s, relabel(alpha, p)));
        worst = std::max(worst, distance(solved, s(candidate)) / (lambda * diam));
    }
    return worst;
}

}  // namespace polycenter
