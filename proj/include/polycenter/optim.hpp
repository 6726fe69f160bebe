#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycenter/error.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter {

struct MedianResult {
    Point2 point;
    std::size_t iterations = 0;
    // || sum_j (V_j - X) / |V_j - X| || at the returned point; for a vertex
    // solution, the same sum over the other vertices (at most 1 there).
    double residual = 0.0;
    std::optional<std::size_t> at_vertex;  // 0-based
    // Objective sum_j |V_j - X| after each iterate, starting point first.
    std::vector<double> objective_history;
};

struct MedianOptions {
    // Stop once the unit-vector balance residual drops to tol.
    double tol = 1e-10;
    std::size_t max_iter = 10000;
};

class NoConvergence : public Error {
public:
    NoConvergence(const std::string& message, MedianResult best)
        : Error(ErrorKind::NoConvergence, message), best_(std::move(best)) {}
    const MedianResult& best() const noexcept { return best_; }

private:
    MedianResult best_;
};

double sum_of_distances(const Polygon& p, Point2 x);

// Geometric median of the vertices by Weiszfeld's fixed-point iteration from
// the vertex centroid. A vertex is returned (with at_vertex set) exactly when
// it satisfies the subgradient optimality test; an iterate that lands on a
// non-optimal vertex steps off along the descent direction.
// Throws NoConvergence (carrying the best iterate) after max_iter.
MedianResult geometric_median(const Polygon& p, const MedianOptions& options = {});

struct EnclosingCircle {
    Point2 center;
    double radius = 0.0;
    std::vector<std::size_t> support;  // 0-based vertex indices on the circle
};

// Exact minimum enclosing circle of the vertex set (incremental
// move-to-front method over a shuffled order fixed by the seed).
EnclosingCircle chebyshev_center(const Polygon& p, std::uint64_t seed = 0);

enum class MinimalCenterKind { GeometricMedian, Chebyshev };

// Re-solves the center on randomly relabelled, scaled and moved copies of p
// and returns the largest distance (relative to the diameter of p) between
// the transformed candidate and the re-solved center.
double check_minimal_center(MinimalCenterKind kind, const Polygon& p, Point2 candidate, std::size_t trials = 16,
                            std::uint64_t seed = 0);

}  // namespace polycenter
