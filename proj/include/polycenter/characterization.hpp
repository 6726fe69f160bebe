#pragma once

#include <optional>
#include <vector>

#include "polycenter/center_function.hpp"

namespace polycenter {

struct CoincidenceReport {
    std::vector<double> values;  // f on the n cyclic shifts
    bool coincident = false;
    // (max - min) / max(max |value|, scale_floor)
    double spread = 0.0;
};

// scale_floor keeps the spread meaningful for functions whose values may all
// vanish (a cosine is bounded by 1, so 1 is the natural floor for it).
CoincidenceReport coincidence(const CenterFunction& f, const Polygon& p, double tol = 1e-9,
                              double scale_floor = 0.0);

// Cosine of the angle at V1 between V1V2 and V1Vn. Throws DegenerateVertex.
double f1_cosine(const Polygon& p);
// |V_{(n+1)/2} - V_{(n+3)/2}| for odd n (the side opposite V1).
double f2_odd(const Polygon& p);
// |V_{n/2} - V_{n/2+2}| for even n >= 4.
double f3_even(const Polygon& p);

VertexCenterFunction cosine_function();
VertexCenterFunction odd_side_function();
VertexCenterFunction even_diagonal_function();

struct PolygonPredicates {
    bool equiangular = false;
    bool equilateral = false;
    bool regular = false;
};

// Interior angles at every vertex (radians). Polygons with a non-zero turning
// number get oriented interior angles (pi minus the signed turn, so reflex
// angles exceed pi); polygons with zero turning number fall back to the
// unsigned angle between the two edges.
std::vector<double> interior_angles(const Polygon& p);

// Direct checks with relative tolerance tol on side lengths and angles.
PolygonPredicates predicates(const Polygon& p, double tol = 1e-7);

// n = 4 member of the rectangle family: opposite sides equal and diagonals
// equal (rectangles and crossed rectangles).
bool in_rectangle_family(const Polygon& p, double tol = 1e-7);

struct CharacterizationTolerances {
    double coincidence = 1e-9;
    double oracle = 1e-7;
};

struct CharacterizationReport {
    bool equiangular = false;
    bool equilateral = false;
    bool regular = false;
    bool convex = false;
    CoincidenceReport f1;
    std::optional<CoincidenceReport> f2;  // odd n
    std::optional<CoincidenceReport> f3;  // even n
    std::optional<bool> rectangle_family;  // n = 4
    bool f1_coincident = false;
    std::optional<bool> f2_coincident;
    std::optional<bool> f3_coincident;
    bool consistent_with_theorems = false;
    std::vector<std::string> inconsistencies;
};

// Throws DomainViolation for degenerate polygons.
CharacterizationReport characterize(const Polygon& p, const CharacterizationTolerances& tol = {});

}  // namespace polycenter
