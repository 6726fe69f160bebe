#include <array>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polycenter/catalog.hpp"
#include "polycenter/characterization.hpp"
#include "polycenter/distance_geometry.hpp"
#include "polycenter/expr.hpp"
#include "polycenter/optim.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace polycenter;

namespace {

using Vertices = std::vector<std::array<double, 2>>;

PyObject* g_error = nullptr;

Polygon to_polygon(const Vertices& vs) {
    std::vector<Point2> pts;
    pts.reserve(vs.size());
    for (const auto& v : vs) pts.push_back({v[0], v[1]});
    return Polygon(std::move(pts));
}

Vertices from_polygon(const Polygon& p) {
    Vertices out;
    for (const auto& v : p) out.push_back({v.x, v.y});
    return out;
}

py::tuple point(Point2 p) { return py::make_tuple(p.x, p.y); }

CenterFunction function_named(const std::string& name) {
    if (auto entry = find_center(name)) return entry->function;
    if (name == "cosine") return cosine_function();
    if (name == "odd-side") return odd_side_function();
    if (name == "even-diagonal") return even_diagonal_function();
    throw Error(ErrorKind::InvalidInput, "unknown center function '" + name + "'");
}

CenterFunction function_from(const std::optional<std::string>& name, const std::optional<std::string>& expression) {
    if (name.has_value() == expression.has_value())
        throw Error(ErrorKind::InvalidInput, "pass exactly one of name= or expr=");
    if (expression) return expr::to_center_function(expr::parse(*expression));
    return function_named(*name);
}

py::dict coincidence_dict(const CoincidenceReport& c) {
    return py::dict("values"_a = c.values, "coincident"_a = c.coincident, "spread"_a = c.spread);
}

}  // namespace

PYBIND11_MODULE(_polycenter, m) {
    m.doc() = "Center functions of planar polygons";

    g_error = PyErr_NewException("polycenter.PolycenterError", PyExc_ValueError, nullptr);
    m.add_object("PolycenterError", py::handle(g_error));
    // args = (kind, message)
    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()));
            PyErr_SetObject(g_error, args.ptr());
        }
    });

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog()) names.push_back(e.name);
        return names;
    });

    m.def("coordinates",
          [](const Vertices& vs, std::optional<std::string> name, std::optional<std::string> expression) {
              return coordinate_map(function_from(name, expression), to_polygon(vs)).coords();
          },
          "vertices"_a, "name"_a = py::none(), "expr"_a = py::none(),
          "Projective coordinates [f(V1..Vn) : f(V2..V1) : ...]");
    m.def("weights",
          [](const Vertices& vs, std::optional<std::string> name, std::optional<std::string> expression) {
              return normalize(coordinate_map(function_from(name, expression), to_polygon(vs))).weights;
          },
          "vertices"_a, "name"_a = py::none(), "expr"_a = py::none());
    m.def("center",
          [](const Vertices& vs, std::optional<std::string> name, std::optional<std::string> expression) {
              return point(geometric_center(function_from(name, expression), to_polygon(vs)));
          },
          "vertices"_a, "name"_a = py::none(), "expr"_a = py::none(), "Point given by a center function");

    m.def("centroid", [](const Vertices& vs) { return point(centroid_vertices(to_polygon(vs))); }, "vertices"_a);
    m.def("perimeter_centroid", [](const Vertices& vs) { return point(perimeter_centroid(to_polygon(vs))); },
          "vertices"_a);
    m.def("lamina_centroid", [](const Vertices& vs) { return point(lamina_centroid(to_polygon(vs))); },
          "vertices"_a);
    m.def("medoid", [](const Vertices& vs) { return medoid(to_polygon(vs)); }, "vertices"_a,
          "0-based index of the medoid vertex");
    m.def("circumcenter", [](const Vertices& vs) { return point(triangle_circumcenter(to_polygon(vs))); },
          "vertices"_a);

    m.def("geometric_median",
          [](const Vertices& vs, double tol, std::size_t max_iter) {
              const auto r = geometric_median(to_polygon(vs), {tol, max_iter});
              return py::dict("point"_a = point(r.point), "iterations"_a = r.iterations, "residual"_a = r.residual,
                              "at_vertex"_a = r.at_vertex);
          },
          "vertices"_a, "tol"_a = 1e-10, "max_iter"_a = 10000);
    m.def("chebyshev_center",
          [](const Vertices& vs, std::uint64_t seed) {
              const auto c = chebyshev_center(to_polygon(vs), seed);
              return py::dict("center"_a = point(c.center), "radius"_a = c.radius, "support"_a = c.support);
          },
          "vertices"_a, "seed"_a = 0);

    m.def("distance_matrix", [](const Vertices& vs) { return distance_matrix(to_polygon(vs)).rows(); },
          "vertices"_a);
    m.def("reconstruct",
          [](const std::vector<std::vector<double>>& rows) {
              return from_polygon(reconstruct(DistanceMatrix(rows)).polygon);
          },
          "distances"_a, "Planar vertices realizing a distance matrix");

    m.def("characterize",
          [](const Vertices& vs, double tol) {
              CharacterizationTolerances t;
              t.coincidence = tol;
              const auto r = characterize(to_polygon(vs), t);
              py::dict d("convex"_a = r.convex, "equiangular"_a = r.equiangular, "equilateral"_a = r.equilateral,
                         "regular"_a = r.regular, "cosine"_a = coincidence_dict(r.f1),
                         "consistent"_a = r.consistent_with_theorems);
              if (r.f2) d["odd_side"] = coincidence_dict(*r.f2);
              if (r.f3) d["even_diagonal"] = coincidence_dict(*r.f3);
              if (r.rectangle_family) d["rectangle_family"] = *r.rectangle_family;
              return d;
          },
          "vertices"_a, "tol"_a = 1e-9);

    m.def("evaluate",
          [](const std::string& expression, const Vertices& vs) {
              return expr::evaluate(expr::parse(expression), distance_matrix(to_polygon(vs)));
          },
          "expr"_a, "vertices"_a, "Value of an expression on the polygon's distances");

    m.def("check_axioms",
          [](std::optional<std::string> name, std::optional<std::string> expression, std::size_t n,
             std::size_t trials, std::uint64_t seed) {
              const auto f = function_from(name, expression);
              const bool convex_only =
                  std::visit([](const auto& fn) { return fn.guard().description; }, f) == "convex polygon";
              const auto r = verify_axioms(f, convex_only ? convex_sampler(n) : simple_sampler(n), trials, seed);
              py::dict d("ok"_a = r.ok(), "relabel_ok"_a = r.relabel_ok, "motion_ok"_a = r.motion_ok,
                         "homogeneity_ok"_a = r.homogeneity_ok, "reflection_ok"_a = r.reflection_ok,
                         "estimated_degree"_a = r.estimated_degree, "failed_property"_a = r.failed_property);
              d["witness"] = r.witness ? py::cast(from_polygon(*r.witness)) : py::none();
              return d;
          },
          "name"_a = py::none(), "expr"_a = py::none(), "n"_a = 5, "trials"_a = 100, "seed"_a = 0);
}
