#pragma once

#include <vector>

#include "polycenter/geometry.hpp"

namespace polycenter {

struct ReconstructionResult {
    Polygon polygon;
    // max |measured d_ij - input d_ij| over all pairs
    double max_residual = 0.0;
};

// Planar embedding of a full distance matrix with V1 = (0, 0),
// V2 = (d12, 0) and clockwise winding (negative signed area, unless the
// points are collinear). Every other vertex is trilaterated from V1 and V2;
// the mirror ambiguity of each one is resolved against the vertices already
// placed.
//
// Throws InfeasibleDistances when d12 = 0, when trilateration has no real
// solution, or when the residual exceeds 1e-6 * max(D).
ReconstructionResult reconstruct(const DistanceMatrix& d);

struct FeasibilityReport {
    bool feasible = false;
    double max_residual = 0.0;
    // Cayley-Menger determinants of all 4-subsets {1, 2, j, k}, divided by
    // max(D)^6, the degree of the determinant in the lengths. Planar
    // configurations make all of them vanish.
    std::vector<double> cm_checks;
};

FeasibilityReport validate(const DistanceMatrix& d);

}  // namespace polycenter
