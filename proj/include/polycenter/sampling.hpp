#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "polycenter/geometry.hpp"

namespace polycenter {

// 64-bit Mersenne Twister; its output sequence is fixed by the standard, so
// everything derived from it here is reproducible across platforms.
using Rng = std::mt19937_64;

// Uniform double in [lo, hi) from the top 53 bits of one draw.
double uniform(Rng& rng, double lo, double hi);
std::size_t uniform_index(Rng& rng, std::size_t n);

using PolygonSampler = std::function<Polygon(Rng&)>;

// Convex n-gon: points on a circle at well-separated random angles, mapped
// through a random non-singular linear map and translated.
Polygon random_convex_polygon(Rng& rng, std::size_t n);
// Star-shaped simple n-gon, usually non-convex.
Polygon random_simple_polygon(Rng& rng, std::size_t n);
// Independent points in a box; may self-intersect.
Polygon random_polygon(Rng& rng, std::size_t n);
// Convex equiangular n-gon (all exterior angles 2 pi / n) with random
// positive side lengths.
Polygon random_equiangular_polygon(Rng& rng, std::size_t n);

// Regular star polygon {n/k}: V_i at angle 2 pi k i / n on a circle.
Polygon regular_polygon(std::size_t n, std::size_t k = 1, double radius = 1.0, Point2 center = {},
                        double phase = 0.0);

RigidMotion random_motion(Rng& rng);
Similarity random_similarity(Rng& rng);

PolygonSampler convex_sampler(std::size_t n);
PolygonSampler simple_sampler(std::size_t n);

}  // namespace polycenter
