#include "polycenter/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "polycenter/catalog.hpp"
#include "polycenter/characterization.hpp"
#include "polycenter/distance_geometry.hpp"
#include "polycenter/document.hpp"
#include "polycenter/expr.hpp"
#include "polycenter/optim.hpp"

namespace polycenter::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int precision = 12;
    std::string file;
    std::string names;
    std::string expression;
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    std::optional<std::size_t> n;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double characterize_tol = 1e-9;
    std::string output;
};

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::optional<CenterFunction> named_function(const std::string& name) {
    if (auto entry = find_center(name)) return entry->function;
    if (name == "cosine") return cosine_function();
    if (name == "odd-side") return odd_side_function();
    if (name == "even-diagonal") return even_diagonal_function();
    return std::nullopt;
}

CenterFunction resolve_function(const Options& o) {
    if (!o.expression.empty()) return expr::to_center_function(expr::parse(o.expression));
    if (auto f = named_function(o.names)) return *f;
    throw Error(ErrorKind::InvalidInput, "unknown center function '" + o.names + "'");
}

void require_one_source(const Options& o) {
    if (o.names.empty() == o.expression.empty())
        throw Error(ErrorKind::InvalidInput, "exactly one of --name or --expr is required");
}

// Vertex positions of the document, reconstructing them from distances when
// only a matrix was given.
Polygon polygon_of(const PolygonDocument& doc) {
    if (doc.vertices) return *doc.vertices;
    return reconstruct(*doc.distances).polygon;
}

void fill_from_function(CenterRecord& r, const CenterFunction& f, const Polygon& p) {
    const auto coords = coordinate_map(f, p);
    r.coords = coords.coords();
    const auto w = normalize(coords);
    r.weights = w.weights;
    r.point = combine(w, p);
}

CenterRecord compute_center(const std::string& name, const Polygon& p, const Options& o,
                            const std::optional<CenterFunction>& custom = std::nullopt) {
    CenterRecord r;
    r.name = name;
    try {
        if (custom) {
            fill_from_function(r, *custom, p);
        } else if (name == "median") {
            const auto m = geometric_median(p, {o.tol, o.max_iter});
            r.point = m.point;
            r.details["iterations"] = m.iterations;
            r.details["residual"] = m.residual;
            r.details["at_vertex"] = m.at_vertex ? json(*m.at_vertex + 1) : json(nullptr);
        } else if (name == "chebyshev") {
            const auto c = chebyshev_center(p, o.seed);
            r.point = c.center;
            r.details["radius"] = c.radius;
            json support = json::array();
            for (auto i : c.support) support.push_back(i + 1);
            r.details["support"] = support;
        } else if (auto f = named_function(name)) {
            if (name == "medoid") r.details["vertex"] = medoid(p) + 1;
            if (name == "circumcenter" && p.size() == 3) triangle_circumcenter(p);
            fill_from_function(r, *f, p);
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown center '" + name + "'");
        }
    } catch (const NoConvergence& e) {
        r.point = e.best().point;
        r.details["iterations"] = e.best().iterations;
        r.details["residual"] = e.best().residual;
        r.error = CenterError{e.kind(), e.what()};
    } catch (const Error& e) {
        r.error = CenterError{e.kind(), e.what()};
    }
    return r;
}

// Records for --name a,b,... or --expr; returns them with the first error kind.
std::vector<CenterRecord> compute_centers(const Polygon& p, const Options& o) {
    std::vector<CenterRecord> records;
    if (!o.expression.empty()) {
        const CenterFunction f = expr::to_center_function(expr::parse(o.expression));
        records.push_back(compute_center(o.expression, p, o, f));
        return records;
    }
    const auto names = split_names(o.names);
    if (names.empty()) throw Error(ErrorKind::InvalidInput, "no center names given");
    for (const auto& name : names) records.push_back(compute_center(name, p, o));
    return records;
}

int first_error_code(const std::vector<CenterRecord>& records, std::ostream& err) {
    for (const auto& r : records)
        if (r.error) {
            err << "error: " << r.name << ": " << to_string(r.error->kind) << ": " << r.error->message << '\n';
            return exit_code(r.error->kind);
        }
    return 0;
}

json rounded(double v, int digits) { return round_significant(v, digits); }

json polygon_json(const Polygon& p, int digits) {
    json a = json::array();
    for (const auto& v : p) a.push_back({round_significant(v.x, digits), round_significant(v.y, digits)});
    return a;
}

json coincidence_json(const CoincidenceReport& c, int digits) {
    json values = json::array();
    for (double v : c.values) values.push_back(rounded(v, digits));
    return {{"values", values}, {"coincident", c.coincident}, {"spread", rounded(c.spread, digits)}};
}

int cmd_center(const Options& o, std::ostream& out, std::ostream& err) {
    require_one_source(o);
    const auto doc = load_document(o.file);
    const Polygon p = polygon_of(doc);
    const auto records = compute_centers(p, o);
    json j = {{"polygon", doc.name}, {"n", p.size()}};
    if (!doc.vertices) j["reconstructed_vertices"] = polygon_json(p, o.precision);
    json centers = json::array();
    for (const auto& r : records) centers.push_back(record_to_json(r, o.precision));
    j["centers"] = centers;
    out << j.dump(2) << '\n';
    return first_error_code(records, err);
}

int cmd_coords(const Options& o, std::ostream& out, std::ostream& err) {
    require_one_source(o);
    const auto doc = load_document(o.file);
    const Polygon p = polygon_of(doc);
    const CenterFunction f = resolve_function(o);
    CenterRecord r;
    r.name = o.expression.empty() ? o.names : o.expression;
    try {
        r.coords = coordinate_map(f, p).coords();
        r.weights = normalize(ProjectiveCoords(*r.coords)).weights;
    } catch (const Error& e) {
        r.error = CenterError{e.kind(), e.what()};
    }
    out << json{{"polygon", doc.name}, {"n", p.size()}, {"center", record_to_json(r, o.precision)}}.dump(2) << '\n';
    return first_error_code({r}, err);
}

int cmd_check_axioms(const Options& o, std::ostream& out, std::ostream& err) {
    require_one_source(o);
    const CenterFunction f = resolve_function(o);
    const auto guard_text = std::visit([](const auto& fn) { return fn.guard().description; }, f);
    const bool convex_only = guard_text == "convex polygon";
    // Functions restricted to one vertex count ("3-gon") default to it.
    std::size_t n = 5;
    if (guard_text.ends_with("-gon") && std::isdigit(static_cast<unsigned char>(guard_text.front())))
        n = std::stoul(guard_text);
    n = o.n.value_or(n);
    if (n < 3) throw Error(ErrorKind::InvalidInput, "--n must be at least 3");
    const auto sampler = convex_only ? convex_sampler(n) : simple_sampler(n);
    const auto report = verify_axioms(f, sampler, o.trials, o.seed);

    json j = {{"name", name_of(f)},
              {"n", n},
              {"trials", o.trials},
              {"seed", o.seed},
              {"sampler", convex_only ? "convex" : "simple"},
              {"relabel_ok", report.relabel_ok},
              {"motion_ok", report.motion_ok},
              {"homogeneity_ok", report.homogeneity_ok},
              {"reflection_ok", report.reflection_ok},
              {"estimated_degree",
               report.estimated_degree ? rounded(*report.estimated_degree, 6) : json(nullptr)},
              {"ok", report.ok()}};
    if (report.failed_property) {
        j["failed_property"] = *report.failed_property;
        if (report.witness) j["witness"] = polygon_json(*report.witness, o.precision);
    }
    out << j.dump(2) << '\n';
    if (!report.ok()) {
        err << "error: AxiomViolation: " << report.failed_property.value_or("unknown") << '\n';
        return exit_code(ErrorKind::AxiomViolation);
    }
    return 0;
}

int cmd_characterize(const Options& o, std::ostream& out, std::ostream&) {
    const auto doc = load_document(o.file);
    const Polygon p = polygon_of(doc);
    CharacterizationTolerances tol;
    tol.coincidence = o.characterize_tol;
    const auto r = characterize(p, tol);
    const int d = o.precision;
    json j = {{"polygon", doc.name},
              {"n", p.size()},
              {"convex", r.convex},
              {"equiangular", r.equiangular},
              {"equilateral", r.equilateral},
              {"regular", r.regular},
              {"cosine", coincidence_json(r.f1, d)}};
    if (r.f2) j["odd_side"] = coincidence_json(*r.f2, d);
    if (r.f3) j["even_diagonal"] = coincidence_json(*r.f3, d);
    if (r.rectangle_family) j["rectangle_family"] = *r.rectangle_family;
    j["consistent"] = r.consistent_with_theorems;
    j["inconsistencies"] = r.inconsistencies;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_reconstruct(const Options& o, std::ostream& out, std::ostream&) {
    const auto doc = load_document(o.file);
    if (!doc.distances) throw Error(ErrorKind::InvalidInput, "$.distances: reconstruct needs a distance matrix");
    const auto result = reconstruct(*doc.distances);
    PolygonDocument rebuilt;
    rebuilt.name = doc.name;
    rebuilt.vertices = result.polygon;
    json j = document_to_json(rebuilt, o.precision);
    j["max_residual"] = rounded(result.max_residual, 3);
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_plot(const Options& o, std::ostream&, std::ostream& err) {
    const auto doc = load_document(o.file);
    const Polygon p = polygon_of(doc);
    std::vector<CenterRecord> records;
    for (const auto& name : split_names(o.names)) records.push_back(compute_center(name, p, o));
    const int code = first_error_code(records, err);
    if (code != 0) return code;
    write_svg(o.output, p, records, doc.name, o.precision);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Polygon center functions: coordinates, centers, axioms and characterizations", "polycenter"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", o.precision, "Significant digits in numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    auto* center = app.add_subcommand("center", "Compute one or more centers of a polygon");
    center->add_option("file", o.file, "Polygon JSON file")->required();
    center->add_option("--name", o.names, "Comma-separated center names");
    center->add_option("--expr", o.expression, "Center function in the expression language");
    center->add_option("--tol", o.tol, "Median stopping tolerance")->capture_default_str();
    center->add_option("--max-iter", o.max_iter, "Median iteration limit")->capture_default_str();
    center->add_option("--seed", o.seed, "Seed for the enclosing-circle shuffle")->capture_default_str();

    auto* coords = app.add_subcommand("coords", "Print projective and barycentric coordinates");
    coords->add_option("file", o.file, "Polygon JSON file")->required();
    coords->add_option("--name", o.names, "Center function name");
    coords->add_option("--expr", o.expression, "Center function in the expression language");

    auto* axioms = app.add_subcommand("check-axioms", "Test a center function for the axioms");
    axioms->add_option("--name", o.names, "Center function name");
    axioms->add_option("--expr", o.expression, "Center function in the expression language");
    axioms->add_option("--n", o.n, "Number of vertices (default 5, or the fixed count the function needs)");
    axioms->add_option("--trials", o.trials, "Random polygons to test")->capture_default_str();
    axioms->add_option("--seed", o.seed, "Random seed")->capture_default_str();

    auto* charz = app.add_subcommand("characterize", "Equiangular / equilateral / regular checks");
    charz->add_option("file", o.file, "Polygon JSON file")->required();
    charz->add_option("--tol", o.characterize_tol, "Coincidence tolerance")->capture_default_str();

    auto* recon = app.add_subcommand("reconstruct", "Embed a distance matrix in the plane");
    recon->add_option("file", o.file, "Distance matrix JSON file")->required();

    auto* plot = app.add_subcommand("plot", "Draw a polygon and its centers as SVG");
    plot->add_option("file", o.file, "Polygon JSON file")->required();
    plot->add_option("--centers", o.names, "Comma-separated center names");
    plot->add_option("-o,--output", o.output, "SVG output path")->required();
    plot->add_option("--tol", o.tol, "Median stopping tolerance")->capture_default_str();
    plot->add_option("--max-iter", o.max_iter, "Median iteration limit")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(ErrorKind::InvalidInput);
    }

    try {
        if (*center) return cmd_center(o, out, err);
        if (*coords) return cmd_coords(o, out, err);
        if (*axioms) return cmd_check_axioms(o, out, err);
        if (*charz) return cmd_characterize(o, out, err);
        if (*recon) return cmd_reconstruct(o, out, err);
        if (*plot) return cmd_plot(o, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return exit_code(ErrorKind::InvalidInput);
}

}  // namespace polycenter::cli
