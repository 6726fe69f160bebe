#include "polycenter/center_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "polycenter/distance_geometry.hpp"
#include "polycenter/error.hpp"

namespace polycenter {

namespace guards {

PolygonGuard any_polygon() { return {"any polygon", nullptr}; }

PolygonGuard nondegenerate() {
    return {"non-degenerate polygon", [](const Polygon& p) { return classify(p).nondegenerate; }};
}

PolygonGuard convex() {
    return {"convex polygon", [](const Polygon& p) { return is_convex(p); }};
}

PolygonGuard vertex_count(std::size_t n) {
    return {std::to_string(n) + "-gon", [n](const Polygon& p) { return p.size() == n; }};
}

MatrixGuard any_matrix() { return {"any distance matrix", nullptr}; }

MatrixGuard nondegenerate_matrix() {
    return {"non-degenerate polygon", [](const DistanceMatrix& d) {
                for (std::size_t i = 0; i < d.n(); ++i)
                    for (std::size_t j = i + 1; j < d.n(); ++j)
                        if (!(d(i, j) > 0.0)) return false;
                return true;
            }};
}

MatrixGuard convex_matrix() {
    return {"convex polygon", [](const DistanceMatrix& d) {
                if (d.n() < 3 || !(d(0, 1) > 0.0)) return false;
                try {
                    return is_convex(reconstruct(d).polygon);
                } catch (const Error&) {
                    return false;
                }
            }};
}

MatrixGuard matrix_size(std::size_t n) {
    return {std::to_string(n) + "-gon", [n](const DistanceMatrix& d) { return d.n() == n; }};
}

}  // namespace guards

VertexCenterFunction::VertexCenterFunction(std::string name, Evaluator evaluator, PolygonGuard guard)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), guard_(std::move(guard)) {}

double VertexCenterFunction::operator()(const Polygon& p) const {
    if (!guard_(p))
        throw Error(ErrorKind::DomainViolation, name_ + " requires a " + guard_.description);
    return evaluator_(p);
}

LengthCenterFunction::LengthCenterFunction(std::string name, Evaluator evaluator, MatrixGuard guard)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), guard_(std::move(guard)) {}

double LengthCenterFunction::operator()(const DistanceMatrix& d) const {
    if (!guard_(d))
        throw Error(ErrorKind::DomainViolation, name_ + " requires a " + guard_.description);
    return evaluator_(d);
}

const std::string& name_of(const CenterFunction& f) {
    return std::visit([](const auto& g) -> const std::string& { return g.name(); }, f);
}

bool in_domain(const CenterFunction& f, const Polygon& p) {
    if (const auto* vf = std::get_if<VertexCenterFunction>(&f)) return vf->accepts(p);
    return std::get<LengthCenterFunction>(f).accepts(distance_matrix(p));
}

ProjectiveCoords::ProjectiveCoords(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorKind::InvalidInput, "empty projective tuple");
    for (double c : coords_)
        if (!std::isfinite(c)) throw Error(ErrorKind::InvalidInput, "non-finite projective coordinate");
    if (std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; }))
        throw Error(ErrorKind::AllZero, "all coordinates are zero; the coordinate map is undefined");
}

ProjectiveCoords ProjectiveCoords::permuted(const DihedralElement& alpha) const {
    std::vector<double> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[alpha.apply0(i)];
    return ProjectiveCoords(std::move(out));
}

double projective_distance(const ProjectiveCoords& a, const ProjectiveCoords& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::size_t m = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::abs(a[i]) > std::abs(a[m])) m = i;
    if (b[m] == 0.0) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] / a[m] - b[i] / b[m]));
    return worst;
}

bool projectively_equal(const ProjectiveCoords& a, const ProjectiveCoords& b, double tol) {
    return projective_distance(a, b) <= tol;
}

ProjectiveCoords coordinate_map_vertex(const VertexCenterFunction& f, const Polygon& p) {
    if (!f.accepts(p))
        throw Error(ErrorKind::DomainViolation, f.name() + " requires a " + f.guard().description);
    std::vector<double> values;
    values.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) values.push_back(f.evaluate_unchecked(cyclic_shift(p, k)));
    return ProjectiveCoords(std::move(values));
}

ProjectiveCoords coordinate_map_length(const LengthCenterFunction& g, const DistanceMatrix& d) {
    if (!g.accepts(d))
        throw Error(ErrorKind::DomainViolation, g.name() + " requires a " + g.guard().description);
    std::vector<double> values;
    values.reserve(d.n());
    for (std::size_t k = 0; k < d.n(); ++k) values.push_back(g.evaluate_unchecked(d.shifted(k)));
    return ProjectiveCoords(std::move(values));
}

ProjectiveCoords coordinate_map(const CenterFunction& f, const Polygon& p) {
    if (const auto* vf = std::get_if<VertexCenterFunction>(&f)) return coordinate_map_vertex(*vf, p);
    return coordinate_map_length(std::get<LengthCenterFunction>(f), distance_matrix(p));
}

BarycentricWeights normalize(const ProjectiveCoords& c) {
    double sum = 0.0;
    double biggest = 0.0;
    for (double v : c.coords()) {
        sum += v;
        biggest = std::max(biggest, std::abs(v));
    }
    if (std::abs(sum) <= 1e-10 * biggest)
        throw Error(ErrorKind::ZeroSum, "coordinates sum to zero; barycentric normalization is impossible");
    BarycentricWeights w;
    w.weights.reserve(c.size());
    for (double v : c.coords()) w.weights.push_back(v / sum);
    return w;
}

Point2 combine(const BarycentricWeights& w, const Polygon& p) {
    if (w.weights.size() != p.size())
        throw Error(ErrorKind::InvalidInput, "weight count does not match vertex count");
    Point2 out{};
    for (std::size_t i = 0; i < p.size(); ++i) out += w.weights[i] * p[i];
    return out;
}

Point2 geometric_center(const CenterFunction& f, const Polygon& p) {
    return combine(normalize(coordinate_map(f, p)), p);
}

VertexCenterFunction lift_length_to_vertex(const LengthCenterFunction& g) {
    PolygonGuard guard{g.guard().description, nullptr};
    if (g.guard().accepts)
        guard.accepts = [g](const Polygon& p) { return g.accepts(distance_matrix(p)); };
    return VertexCenterFunction(
        g.name() + " (lifted)", [g](const Polygon& p) { return g.evaluate_unchecked(distance_matrix(p)); },
        std::move(guard));
}

LengthCenterFunction lower_vertex_to_length(const VertexCenterFunction& f) {
    MatrixGuard guard{f.guard().description, nullptr};
    if (f.guard().accepts)
        guard.accepts = [f](const DistanceMatrix& d) { return f.accepts(reconstruct(d).polygon); };
    return LengthCenterFunction(
        f.name() + " (lowered)", [f](const DistanceMatrix& d) { return f.evaluate_unchecked(reconstruct(d).polygon); },
        std::move(guard));
}

namespace {

VertexCenterFunction as_vertex_function(const CenterFunction& f) {
    if (const auto* vf = std::get_if<VertexCenterFunction>(&f)) return *vf;
    return lift_length_to_vertex(std::get<LengthCenterFunction>(f));
}

Polygon mirrored(const Polygon& p) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back({v.x, -v.y});
    return Polygon(std::move(out));
}

double relative_gap(double a, double b, double floor) {
    if (a == b) return 0.0;
    const double denom = std::max({std::abs(a), std::abs(b), floor});
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(a - b) / denom;
}

}  // namespace

AxiomReport verify_axioms(const CenterFunction& cf, const PolygonSampler& sampler, std::size_t trials,
                          std::uint64_t seed, const AxiomTolerances& tol) {
    if (trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be at least 1");
    const VertexCenterFunction f = as_vertex_function(cf);
    Rng rng(seed);

    AxiomReport report;
    report.relabel_ok = report.motion_ok = report.reflection_ok = true;
    report.trials = trials;
    auto fail = [&report](const char* property, const Polygon& p) {
        if (!report.failed_property) {
            report.failed_property = property;
            report.witness = p;
        }
    };

    std::vector<double> slopes;
    std::vector<Polygon> slope_sources;
    bool signs_consistent = true;
    std::optional<Polygon> sign_witness;
    constexpr std::array<double, 4> kScales{0.5, 1.0, 2.0, 4.0};

    for (std::size_t t = 0; t < trials; ++t) {
        const Polygon p = sampler(rng);
        const double value = f(p);

        double ref = 0.0;
        std::size_t strongest = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double v = k == 0 ? value : f(cyclic_shift(p, k));
            if (std::abs(v) > ref) {
                ref = std::abs(v);
                strongest = k;
            }
        }
        const double floor = 1e-12 * ref;

        const double relabel_gap = relative_gap(value, f(relabel(DihedralElement::sigma(p.size()), p)), floor);
        report.max_violation = std::max(report.max_violation, relabel_gap);
        if (relabel_gap > tol.relabel) {
            report.relabel_ok = false;
            fail("relabel", p);
        }

        const double motion_gap = relative_gap(value, f(apply_motion(random_motion(rng), p)), floor);
        report.max_violation = std::max(report.max_violation, motion_gap);
        if (motion_gap > tol.motion) {
            report.motion_ok = false;
            fail("motion", p);
        }

        if (relative_gap(value, f(mirrored(p)), floor) > tol.motion) report.reflection_ok = false;

        if (ref == 0.0) continue;
        const Polygon q = cyclic_shift(p, strongest);
        std::array<double, kScales.size()> v{};
        for (std::size_t i = 0; i < kScales.size(); ++i) v[i] = f(scaled(q, kScales[i]));
        for (std::size_t i = 0; i < kScales.size(); ++i) {
            if (v[i] == 0.0 || std::signbit(v[i]) != std::signbit(v[1])) {
                signs_consistent = false;
                if (!sign_witness) sign_witness = q;
            }
        }
        if (!signs_consistent) continue;
        for (std::size_t i = 0; i + 1 < kScales.size(); ++i) {
            slopes.push_back(std::log(std::abs(v[i + 1] / v[i])) / std::log(kScales[i + 1] / kScales[i]));
            slope_sources.push_back(q);
        }
    }

    if (!signs_consistent) {
        report.homogeneity_ok = false;
        report.max_violation = std::max(report.max_violation, 1.0);
        fail("homogeneity", *sign_witness);
    } else if (slopes.empty()) {
        report.homogeneity_ok = false;
    } else {
        const auto [lo, hi] = std::minmax_element(slopes.begin(), slopes.end());
        const double spread = 0.5 * (*hi - *lo);
        report.max_violation = std::max(report.max_violation, spread);
        report.homogeneity_ok = spread <= tol.degree_spread;
        if (report.homogeneity_ok) {
            double mean = 0.0;
            for (double s : slopes) mean += s;
            mean /= static_cast<double>(slopes.size());
            report.estimated_degree = std::abs(mean) < 1e-12 ? 0.0 : mean;
        } else {
            // Witness: the sample whose slope sits farthest from the first one.
            std::size_t worst = 0;
            for (std::size_t i = 1; i < slopes.size(); ++i)
                if (std::abs(slopes[i] - slopes[0]) > std::abs(slopes[worst] - slopes[0])) worst = i;
            fail("homogeneity", slope_sources[worst]);
        }
    }
    if (!report.homogeneity_ok && !report.failed_property) report.failed_property = "homogeneity";
    return report;
}

}  // namespace polycenter
