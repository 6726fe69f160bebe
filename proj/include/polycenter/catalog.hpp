#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycenter/center_function.hpp"

namespace polycenter {

// f0 = 1: the vertex centroid.
VertexCenterFunction centroid_function();
// g1 = e_n1 + e_12: the perimeter centroid of a convex polygon.
LengthCenterFunction perimeter_function();
// f2 = |(B-V1)^(B-V2)| + |(B-Vn)^(B-V1)| + (1/n) sum_j |(B-Vj)^(B-Vj+1)|,
// B the vertex centroid: the lamina centroid of a convex polygon.
VertexCenterFunction lamina_function();
// f3 = 1 when V1 attains the minimal sum of distances to all vertices (ties
// within 1e-10 * diameter count as attaining it), else 0.
VertexCenterFunction medoid_function();
// Barycentric circumcenter weight of V1 in a triangle:
// a^2 (b^2 + c^2 - a^2) with a = d23, b = d31, c = d12.
LengthCenterFunction circumcenter_function();

enum class CenterKind { VertexBased, LengthBased };

struct CatalogEntry {
    std::string name;
    CenterKind kind;
    CenterFunction function;
    std::string domain_note;
};

// Stable identifiers: centroid, perimeter, lamina, medoid, circumcenter.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_center(std::string_view name);

Point2 centroid_vertices(const Polygon& p);
// Throws DomainViolation unless p is convex.
Point2 perimeter_centroid(const Polygon& p);
// Affine form through f2. Throws DomainViolation unless p is convex.
Point2 lamina_centroid(const Polygon& p);
// sum_i (V_{i-1}^V_i + V_i^V_{i+1}) / (3 sum_j V_j^V_{j+1}) V_i. Works for any
// polygon with non-zero shoelace sum; the coefficients add up to 2/3, so it
// is a reference formula rather than a center function. Throws ZeroArea.
Point2 lamina_centroid_direct(const Polygon& p);
// 0-based index of the vertex minimizing the sum of distances to all
// vertices. Throws Tie when another vertex is within 1e-10 * diameter of the
// minimum.
std::size_t medoid(const Polygon& p);
// Throws DomainViolation unless n = 3, Collinear for a flat triangle.
Point2 triangle_circumcenter(const Polygon& p);

// Kimberling's trilinear circumcenter function a (b^2 + c^2 - a^2).
double circumcenter_trilinear(double a, double b, double c);
// [t1 : t2 : t3] trilinear -> [a t1 : b t2 : c t3] barycentric, where a, b, c
// are the sides opposite the three vertices.
std::vector<double> trilinear_to_barycentric(const std::vector<double>& trilinear, double a, double b, double c);

}  // namespace polycenter
