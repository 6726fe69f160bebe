// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances are fixed here.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "polycenter/catalog.hpp"
#include "polycenter/characterization.hpp"
#include "polycenter/distance_geometry.hpp"
#include "polycenter/expr.hpp"
#include "polycenter/optim.hpp"
#include "polycenter/sampling.hpp"

using namespace polycenter;

namespace {

constexpr double kCoordTol = 1e-9;
constexpr double kCenterTol = 1e-9;
constexpr double kLiftTol = 1e-7;
constexpr double kMatrixTol = 1e-9;
constexpr double kTrapezoidTol = 1e-12;
constexpr double kMedianResidual = 1e-8;
constexpr double kGridTol = 1e-4;
constexpr double kCircleTol = 1e-9;
constexpr double kSquareTol = 1e-12;
constexpr double kCayleyMengerTol = 1e-9;
constexpr double kAngleOracleTol = 1e-7;
constexpr double kRegularSuiteSeconds = 5.0;

// Collects the first failure of a criterion.
struct Check {
    std::string failure;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failure.empty()) failure = what;
    }
    bool ok() const { return failure.empty(); }
};

bool near(Point2 a, Point2 b, double tol) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; }

std::string str(Point2 p) {
    std::ostringstream s;
    s.precision(17);
    s << "(" << p.x << ", " << p.y << ")";
    return s.str();
}

double max_abs_diff(const DistanceMatrix& a, const DistanceMatrix& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

// Random polygon that every non-triangle catalog entry admits half the time.
Polygon mixed_polygon(Rng& rng, std::size_t n, int t) {
    return t % 2 == 0 ? random_convex_polygon(rng, n) : random_polygon(rng, n);
}

Check criterion_regular_polygons() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t k = 1; 2 * k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const auto p = regular_polygon(n, k, 1.7, {0.3, -2.0}, 0.2);
            const Point2 mean = oracle::mean(oracle::points(p));
            const ProjectiveCoords ones(std::vector<double>(n, 1.0));
            for (const auto& e : catalog()) {
                if (!in_domain(e.function, p)) continue;
                const std::string tag = e.name + " {" + std::to_string(n) + "/" + std::to_string(k) + "}";
                c.expect(projective_distance(coordinate_map(e.function, p), ones) <= kCoordTol, tag + " coords");
                c.expect(near(geometric_center(e.function, p), mean, kCenterTol * 1.7), tag + " center");
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < kRegularSuiteSeconds, "runtime " + std::to_string(secs) + " s");
    return c;
}

Check criterion_equivariance() {
    Check c;
    Rng rng(2001);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + t % 10;
        const auto p = mixed_polygon(rng, n, t);
        for (const auto& e : catalog()) {
            if (!in_domain(e.function, p)) continue;
            const auto base = coordinate_map(e.function, p);
            for (const auto& a : DihedralElement::all(n)) {
                const auto moved = coordinate_map(e.function, relabel(a, p));
                c.expect(oracle::proportionality_defect(moved.coords(), base.permuted(a).coords()) <= kCoordTol,
                         e.name + " relabel, trial " + std::to_string(t));
            }
        }
    }
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + t % 10;
        const auto p = mixed_polygon(rng, n, t);
        const auto s = random_similarity(rng);
        const auto q = apply_motion(s, p);
        const double scale = s.scale * diameter(p);
        for (const auto& e : catalog()) {
            if (!in_domain(e.function, p)) continue;
            if (e.name == "medoid" || e.name == "circumcenter") {
                // Skip configurations where the center is ill-conditioned.
                if (e.name == "circumcenter" && std::abs(signed_area(p)) < 1e-3 * diameter(p) * diameter(p)) continue;
                if (e.name == "medoid") {
                    const auto sums = oracle::vertex_sums(oracle::points(p));
                    auto sorted = sums;
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted[1] - sorted[0] < 1e-9 * sorted[0]) continue;
                }
            }
            const Point2 moved = geometric_center(e.function, q);
            c.expect(near(moved, s(geometric_center(e.function, p)), kCenterTol * std::max(1.0, scale)),
                     e.name + " similarity, trial " + std::to_string(t));
        }
    }
    return c;
}

Check criterion_lift_lower() {
    Check c;
    Rng rng(2002);
    const auto lifted = lift_length_to_vertex(perimeter_function());
    const auto lowered_lamina = lower_vertex_to_length(lamina_function());
    const auto centroid_twice = lift_length_to_vertex(lower_vertex_to_length(centroid_function()));
    for (int t = 0; t < 200; ++t) {
        const auto p = random_convex_polygon(rng, 3 + t % 10);
        const double s = std::max(1.0, diameter(p));
        c.expect(near(geometric_center(lifted, p), perimeter_centroid(p), kLiftTol * s), "lifted perimeter");
        c.expect(near(geometric_center(lowered_lamina, p), lamina_centroid(p), kLiftTol * s), "lowered lamina");
        c.expect(near(geometric_center(centroid_twice, p), centroid_vertices(p), kLiftTol * s), "centroid round trip");

        const auto q = random_polygon(rng, 3 + t % 10);
        const auto d = distance_matrix(q);
        const auto back = distance_matrix(reconstruct(d).polygon);
        c.expect(max_abs_diff(d, back) <= kMatrixTol * d.max(), "matrix round trip, trial " + std::to_string(t));
    }
    return c;
}

Check criterion_lamina() {
    Check c;
    Rng rng(2003);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_convex_polygon(rng, 4 + t % 6);
        const double s = std::max(1.0, diameter(p));
        c.expect(near(geometric_center(lamina_function(), p), lamina_centroid_direct(p), kCenterTol * s),
                 "affine vs direct, trial " + std::to_string(t));
    }
    const Polygon trapezoid{{0, 0}, {2, 0}, {1, 1}, {0, 1}};
    const Point2 fan = oracle::fan_centroid(oracle::points(trapezoid));
    c.expect(near(fan, {7.0 / 9, 4.0 / 9}, kTrapezoidTol), "fan oracle on trapezoid " + str(fan));
    const Point2 lib = geometric_center(lamina_function(), trapezoid);
    c.expect(near(lib, fan, kTrapezoidTol), "trapezoid " + str(lib));
    return c;
}

Check criterion_characterization() {
    Check c;
    Rng rng(2004);
    // Convex samples, equiangular and not.
    int eq = 0, other = 0;
    for (int t = 0; eq + other < 500; ++t) {
        const std::size_t n = 3 + t % 10;
        Polygon p = t % 2 == 0 ? random_equiangular_polygon(rng, n) : random_convex_polygon(rng, n);
        if (!is_convex(p)) continue;
        const bool oracle_eq = oracle::all_equal(oracle::convex_angles(oracle::points(p)), kAngleOracleTol);
        const auto r = characterize(p);
        c.expect(r.f1_coincident == oracle_eq, "cosine coincidence misclassified, trial " + std::to_string(t));
        c.expect(r.equiangular == oracle_eq, "equiangularity misclassified, trial " + std::to_string(t));
        (oracle_eq ? eq : other)++;
    }
    c.expect(eq >= 100 && other >= 100, "unbalanced sample");

    const double h = std::sqrt(3.0) / 2;
    const Polygon two_triangles{{0, 0}, {0.5, h}, {1, 0}, {1.5, h}, {-0.5, h}};
    const auto r = characterize(two_triangles);
    c.expect(r.f1_coincident && !r.equiangular, "two-triangle pentagon");

    for (std::size_t n : {5u, 7u, 9u}) {
        for (int t = 0; t < 40; ++t) {
            Polygon p = t % 2 == 0 ? regular_polygon(n, 1 + static_cast<std::size_t>(t / 2) % 2)
                                   : random_convex_polygon(rng, n);
            if (t % 4 == 0) p = apply_motion(random_similarity(rng), p);
            const bool oracle_eq = oracle::all_equal(oracle::side_lengths(oracle::points(p)), kAngleOracleTol);
            const auto rr = characterize(p);
            c.expect(rr.f2_coincident.value_or(!oracle_eq) == oracle_eq && rr.equilateral == oracle_eq,
                     "odd equilateral, n=" + std::to_string(n));
        }
    }

    const auto rect = coincidence(even_diagonal_function(), Polygon{{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    c.expect(rect.coincident, "rectangle not coincident");
    for (double v : rect.values) c.expect(std::abs(v - std::sqrt(5.0)) <= 1e-12, "rectangle value");
    const auto para = coincidence(even_diagonal_function(), Polygon{{0, 0}, {2, 0}, {3, 1}, {1, 1}});
    c.expect(!para.coincident, "parallelogram coincident");
    auto sorted = para.values;
    std::sort(sorted.begin(), sorted.end());
    c.expect(std::abs(sorted.front() - std::sqrt(2.0)) <= 1e-12 && std::abs(sorted.back() - std::sqrt(10.0)) <= 1e-12,
             "parallelogram values");
    return c;
}

Check criterion_optimization() {
    Check c;
    Rng rng(2005);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_polygon(rng, 5);
        const auto r = geometric_median(p);
        if (!r.at_vertex) c.expect(r.residual <= kMedianResidual, "median residual");
        c.expect(near(r.point, oracle::grid_median(oracle::points(p)), kGridTol), "median vs grid " + str(r.point));
    }
    for (int t = 0; t < 100; ++t) {
        const auto p = random_polygon(rng, 3 + t % 8);
        const auto e = chebyshev_center(p);
        const auto o = oracle::brute_enclosing_circle(oracle::points(p));
        c.expect(std::abs(e.radius - o.radius) <= kCircleTol && near(e.center, o.center, kCircleTol),
                 "enclosing circle, trial " + std::to_string(t));
    }
    const Polygon square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    c.expect(near(geometric_median(square).point, {0.5, 0.5}, kSquareTol), "square median");
    const auto sq = chebyshev_center(square);
    c.expect(near(sq.center, {0.5, 0.5}, kSquareTol) && std::abs(sq.radius - std::sqrt(2.0) / 2) <= kSquareTol,
             "square circle");
    return c;
}

Check criterion_cayley_menger() {
    Check c;
    Rng rng(2006);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_polygon(rng, 4 + t % 6);
        const auto rep = validate(distance_matrix(p));
        c.expect(rep.feasible, "measured matrix infeasible");
        for (double v : rep.cm_checks) c.expect(std::abs(v) <= kCayleyMengerTol, "scaled determinant " + std::to_string(v));
    }
    const DistanceMatrix tetra(std::vector<std::vector<double>>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    c.expect(!validate(tetra).feasible, "tetrahedron accepted by validate");
    bool rejected = false;
    try {
        reconstruct(tetra);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::InfeasibleDistances;
    }
    c.expect(rejected, "tetrahedron accepted by reconstruct");
    return c;
}

Check criterion_dsl() {
    Check c;
    Rng rng(2007);
    const auto parsed = expr::to_center_function(expr::parse("d(n,1) + d(1,2)"));
    for (int t = 0; t < 100; ++t) {
        // The built-in is guarded to convex polygons.
        const auto p = random_convex_polygon(rng, 3 + t % 10);
        c.expect(coordinate_map(parsed, p).coords() == coordinate_map(perimeter_function(), p).coords(),
                 "parsed perimeter function differs, trial " + std::to_string(t));
    }
    bool witnessed = false;
    try {
        expr::admit(expr::parse("d(1,2)"), 3, 1);
    } catch (const expr::AxiomViolation& e) {
        if (e.property() == "relabel" && e.witness()) {
            const auto& w = *e.witness();
            // sigma swaps d(1,2) and d(1,3); the witness must tell them apart.
            witnessed = std::abs(distance(w[0], w[1]) - distance(w[0], w[2])) > 1e-9;
        }
    }
    c.expect(witnessed, "d(1,2) admitted or no sigma witness");
    const Polygon tri{{0, 0}, {3, 0}, {0, 4}};
    c.expect(coordinate_map(parsed, tri).coords() == std::vector<double>{7, 8, 9}, "[7:8:9] fixture");
    return c;
}

struct CliCase {
    std::string name;
    int exit_code;
    std::string args;
};

std::vector<CliCase> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<CliCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto a = line.find(';');
        const auto b = line.find(';', a + 1);
        cases.push_back({line.substr(0, a), std::stoi(line.substr(a + 1, b - a - 1)), line.substr(b + 1)});
    }
    return cases;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
        s.replace(pos, from.size(), to);
    return s;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Space-separated words, each single-quoted for the shell.
std::string shell_words(const std::string& args) {
    std::istringstream in(args);
    std::string word, out;
    while (in >> word) out += " '" + replace_all(word, "'", "'\\''") + "'";
    return out;
}

// Runs the CLI, returning (exit code, stdout). Stderr is discarded.
std::pair<int, std::string> run(const std::string& args) {
    const std::string cmd = std::string(POLYCENTER_CLI) + shell_words(args) + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Check criterion_cli() {
    Check c;
    const std::string root = POLYCENTER_CLI_DATA;
    const auto tmp = std::filesystem::temp_directory_path() / "polycenter_acceptance";
    std::filesystem::create_directories(tmp);
    std::array<bool, 6> codes{};
    bool every_subcommand[6] = {};
    const std::array<std::string, 6> subcommands{"center", "coords", "check-axioms", "characterize", "reconstruct",
                                                 "plot"};
    for (const auto& k : read_manifest(root + "/cases.txt")) {
        for (std::size_t i = 0; i < subcommands.size(); ++i)
            if (k.args.rfind(subcommands[i] + " ", 0) == 0) every_subcommand[i] = true;
        const bool plots = k.args.find("@OUT@") != std::string::npos;
        std::string svg_a, svg_b;
        for (int round = 0; round < (plots ? 2 : 1); ++round) {
            const auto out = tmp / (k.name + std::to_string(round) + ".svg");
            std::filesystem::remove(out);
            const std::string args = replace_all(replace_all(k.args, "@DATA@", root + "/data"), "@OUT@", out.string());
            const auto [code, stdout_text] = run(args);
            c.expect(code == k.exit_code, k.name + ": exit " + std::to_string(code));
            c.expect(stdout_text == slurp(root + "/golden/" + k.name + ".out"), k.name + ": stdout differs");
            if (plots) (round == 0 ? svg_a : svg_b) = std::filesystem::exists(out) ? slurp(out) : "";
            std::filesystem::remove(out);
        }
        if (k.exit_code >= 0 && k.exit_code < 6) codes[k.exit_code] = true;
        if (plots && k.exit_code == 0) {
            c.expect(!svg_a.empty() && svg_a == svg_b, k.name + ": SVG differs between runs");
            c.expect(svg_a == slurp(root + "/golden/" + k.name + ".svg"), k.name + ": SVG differs from golden");
        }
    }
    for (int code = 2; code <= 5; ++code) c.expect(codes[code], "no case for exit " + std::to_string(code));
    for (std::size_t i = 0; i < subcommands.size(); ++i)
        c.expect(every_subcommand[i], "no case for " + subcommands[i]);
    std::filesystem::remove_all(tmp);
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"1 regular and star polygons", criterion_regular_polygons},
        {"2 relabelling and similarity equivariance", criterion_equivariance},
        {"3 lift/lower and reconstruction round trips", criterion_lift_lower},
        {"4 lamina centroid forms", criterion_lamina},
        {"5 characterization", criterion_characterization},
        {"6 geometric median and enclosing circle", criterion_optimization},
        {"7 Cayley-Menger feasibility", criterion_cayley_menger},
        {"8 expression language", criterion_dsl},
        {"9 command line golden files", criterion_cli},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.failure = std::string("exception: ") + e.what();
        }
        if (c.ok()) {
            std::cout << "PASS " << name << " (" << c.checks << " checks)\n";
        } else {
            ++failed;
            std::cout << "FAIL " << name << ": " << c.failure << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
