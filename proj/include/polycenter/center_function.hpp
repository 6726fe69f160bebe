#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polycenter/geometry.hpp"
#include "polycenter/sampling.hpp"

namespace polycenter {

// Named predicate restricting where a center function may be evaluated.
template <typename Input>
struct DomainGuard {
    std::string description;
    std::function<bool(const Input&)> accepts;

    bool operator()(const Input& x) const { return !accepts || accepts(x); }
};

using PolygonGuard = DomainGuard<Polygon>;
using MatrixGuard = DomainGuard<DistanceMatrix>;

namespace guards {
PolygonGuard any_polygon();
PolygonGuard nondegenerate();
PolygonGuard convex();
PolygonGuard vertex_count(std::size_t n);
MatrixGuard any_matrix();
// Off-diagonal entries positive.
MatrixGuard nondegenerate_matrix();
// The reconstructed polygon is convex.
MatrixGuard convex_matrix();
MatrixGuard matrix_size(std::size_t n);
}  // namespace guards

// Real-valued function of the vertices (V1, ..., Vn).
class VertexCenterFunction {
public:
    using Evaluator = std::function<double(const Polygon&)>;

    VertexCenterFunction(std::string name, Evaluator evaluator, PolygonGuard guard = guards::any_polygon());

    const std::string& name() const noexcept { return name_; }
    const PolygonGuard& guard() const noexcept { return guard_; }
    bool accepts(const Polygon& p) const { return guard_(p); }
    // Throws DomainViolation outside the guarded domain.
    double operator()(const Polygon& p) const;
    // Skips the guard.
    double evaluate_unchecked(const Polygon& p) const { return evaluator_(p); }

private:
    std::string name_;
    Evaluator evaluator_;
    PolygonGuard guard_;
};

// Real-valued function of the lengths d_ij.
class LengthCenterFunction {
public:
    using Evaluator = std::function<double(const DistanceMatrix&)>;

    LengthCenterFunction(std::string name, Evaluator evaluator, MatrixGuard guard = guards::any_matrix());

    const std::string& name() const noexcept { return name_; }
    const MatrixGuard& guard() const noexcept { return guard_; }
    bool accepts(const DistanceMatrix& d) const { return guard_(d); }
    double operator()(const DistanceMatrix& d) const;
    double evaluate_unchecked(const DistanceMatrix& d) const { return evaluator_(d); }

private:
    std::string name_;
    Evaluator evaluator_;
    MatrixGuard guard_;
};

using CenterFunction = std::variant<VertexCenterFunction, LengthCenterFunction>;

const std::string& name_of(const CenterFunction& f);
// Whether the guard of f admits p (length functions see distance_matrix(p)).
bool in_domain(const CenterFunction& f, const Polygon& p);

// A point of real projective space; never the all-zero tuple.
class ProjectiveCoords {
public:
    explicit ProjectiveCoords(std::vector<double> coords);

    const std::vector<double>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }

    // [t_alpha(1) : ... : t_alpha(n)]
    ProjectiveCoords permuted(const DihedralElement& alpha) const;

private:
    std::vector<double> coords_;
};

// Both tuples are divided by their entry at the index where the first one has
// its largest magnitude; then compared in the max norm.
double projective_distance(const ProjectiveCoords& a, const ProjectiveCoords& b);
bool projectively_equal(const ProjectiveCoords& a, const ProjectiveCoords& b, double tol = 1e-9);

struct BarycentricWeights {
    std::vector<double> weights;  // sums to 1
};

// entry k = f(V_k, ..., V_n, V_1, ..., V_{k-1})
ProjectiveCoords coordinate_map_vertex(const VertexCenterFunction& f, const Polygon& p);
// entry k = g(d_{rho^(k-1)(i), rho^(k-1)(j)})
ProjectiveCoords coordinate_map_length(const LengthCenterFunction& g, const DistanceMatrix& d);
ProjectiveCoords coordinate_map(const CenterFunction& f, const Polygon& p);

// Throws ZeroSum when |sum| <= 1e-10 * max |coord|.
BarycentricWeights normalize(const ProjectiveCoords& c);

Point2 combine(const BarycentricWeights& w, const Polygon& p);
Point2 geometric_center(const CenterFunction& f, const Polygon& p);

// f(p) = g(distance_matrix(p))
VertexCenterFunction lift_length_to_vertex(const LengthCenterFunction& g);
// g(D) = f(reconstruct(D).polygon)
LengthCenterFunction lower_vertex_to_length(const VertexCenterFunction& f);

struct AxiomReport {
    bool relabel_ok = false;
    bool motion_ok = false;
    bool homogeneity_ok = false;
    std::optional<double> estimated_degree;  // set only when homogeneity_ok
    double max_violation = 0.0;
    // Invariance under reflections. Not one of the axioms; reported because
    // several constructions built on top of the axioms need it.
    bool reflection_ok = false;
    std::size_t trials = 0;
    // First failing property ("relabel", "motion", "homogeneity") and the
    // polygon that exposed it.
    std::optional<std::string> failed_property;
    std::optional<Polygon> witness;

    bool ok() const { return relabel_ok && motion_ok && homogeneity_ok; }
};

struct AxiomTolerances {
    double relabel = 1e-9;
    double motion = 1e-9;
    double degree_spread = 1e-6;
};

// Statistical check of relabelling symmetry under sigma, invariance under
// rigid motions and homogeneity (log-log slope over t in {1/2, 1, 2, 4}).
// Deterministic given the seed.
AxiomReport verify_axioms(const CenterFunction& f, const PolygonSampler& sampler, std::size_t trials,
                          std::uint64_t seed, const AxiomTolerances& tol = {});

}  // namespace polycenter
