#include "polycenter/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace polycenter {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::InvalidInput, path + ": " + what);
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) schema_error(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) schema_error(path, "expected a finite number");
    return v;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

PolygonDocument document_from_json(const json& j) {
    if (!j.is_object()) schema_error("$", "expected an object");
    for (const auto& [key, _] : j.items())
        if (key != "name" && key != "vertices" && key != "distances") schema_error("$." + key, "unknown field");

    PolygonDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) schema_error("$.name", "expected a string");
        doc.name = j["name"].get<std::string>();
    }
    const bool has_vertices = j.contains("vertices");
    const bool has_distances = j.contains("distances");
    if (has_vertices == has_distances)
        schema_error("$", "exactly one of \"vertices\" or \"distances\" is required");

    if (has_vertices) {
        const auto& vs = j["vertices"];
        if (!vs.is_array()) schema_error("$.vertices", "expected an array");
        if (vs.size() < 3) schema_error("$.vertices", "expected at least 3 vertices");
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const std::string path = "$.vertices[" + std::to_string(i) + "]";
            if (!vs[i].is_array() || vs[i].size() != 2) schema_error(path, "expected [x, y]");
            pts.push_back({number_at(vs[i][0], path + "[0]"), number_at(vs[i][1], path + "[1]")});
        }
        doc.vertices = Polygon(std::move(pts));
    } else {
        const auto& ds = j["distances"];
        if (!ds.is_array()) schema_error("$.distances", "expected an array");
        const std::size_t n = ds.size();
        if (n < 3) schema_error("$.distances", "expected at least 3 rows");
        std::vector<std::vector<double>> rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string path = "$.distances[" + std::to_string(i) + "]";
            if (!ds[i].is_array() || ds[i].size() != n)
                schema_error(path, "expected an array of " + std::to_string(n) + " numbers");
            for (std::size_t k = 0; k < n; ++k)
                rows[i].push_back(number_at(ds[i][k], path + "[" + std::to_string(k) + "]"));
        }
        try {
            doc.distances = DistanceMatrix(rows);
        } catch (const Error& e) {
            schema_error("$.distances", e.what());
        }
    }
    return doc;
}

PolygonDocument read_document(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

PolygonDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return read_document(in);
}

double round_significant(double v, int digits) {
    if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", std::clamp(digits, 1, 17) - 1, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string format_number(double v, int digits) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), v);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

ojson document_to_json(const PolygonDocument& doc, int digits) {
    ojson j = ojson::object();
    j["name"] = doc.name;
    if (doc.vertices) {
        ojson vs = ojson::array();
        for (const auto& v : *doc.vertices)
            vs.push_back({round_significant(v.x, digits), round_significant(v.y, digits)});
        j["vertices"] = vs;
    }
    if (doc.distances) {
        ojson ds = ojson::array();
        for (const auto& row : doc.distances->rows()) {
            ojson r = ojson::array();
            for (double v : row) r.push_back(round_significant(v, digits));
            ds.push_back(r);
        }
        j["distances"] = ds;
    }
    return j;
}

void write_document(std::ostream& out, const PolygonDocument& doc, int digits) {
    out << document_to_json(doc, digits).dump(2) << '\n';
}

ojson record_to_json(const CenterRecord& r, int digits) {
    auto rounded = [digits](const std::vector<double>& v) {
        ojson a = ojson::array();
        for (double x : v) a.push_back(round_significant(x, digits));
        return a;
    };
    ojson j = ojson::object();
    j["name"] = r.name;
    if (r.coords) j["coords"] = rounded(*r.coords);
    if (r.weights) j["weights"] = rounded(*r.weights);
    if (r.point) j["point"] = {round_significant(r.point->x, digits), round_significant(r.point->y, digits)};
    for (const auto& [key, value] : r.details.items())
        j[key] = value.is_number_float() ? ojson(round_significant(value.get<double>(), digits)) : value;
    if (r.error) j["error"] = {{"kind", std::string(to_string(r.error->kind))}, {"message", r.error->message}};
    return j;
}

std::string render_svg(const Polygon& p, const std::vector<CenterRecord>& records, const std::string& title,
                       int digits) {
    static constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    double min_x = p[0].x, max_x = p[0].x, min_y = p[0].y, max_y = p[0].y;
    auto extend = [&](Point2 v) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    };
    for (const auto& v : p) extend(v);
    for (const auto& r : records)
        if (r.point) extend(*r.point);
    double span = std::max(max_x - min_x, max_y - min_y);
    if (span == 0.0) span = 1.0;
    const double margin = 0.1 * span;
    const double vx = min_x - margin;
    const double vy = -max_y - margin;
    const double vw = (max_x - min_x) + 2 * margin;
    const double vh = (max_y - min_y) + 2 * margin;
    const double stroke = span / 200.0;
    auto num = [digits](double v) { return format_number(v, digits); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw)
        << ' ' << num(vh) << "\" width=\"400\" height=\"" << num(std::round(400.0 * vh / vw)) << "\">\n";
    if (!title.empty()) svg << "  <title>" << xml_escape(title) << "</title>\n";
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) svg << ' ';
        svg << num(p[i].x) << ',' << num(-p[i].y);
    }
    svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\"/>\n";
    std::size_t color = 0;
    for (const auto& r : records) {
        if (!r.point) continue;
        const char* c = kPalette[color++ % std::size(kPalette)];
        const double x = r.point->x;
        const double y = -r.point->y;
        svg << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(3 * stroke) << "\" fill=\""
            << c << "\"/>\n";
        svg << "  <text x=\"" << num(x + 4 * stroke) << "\" y=\"" << num(y - 4 * stroke) << "\" font-size=\""
            << num(span / 25.0) << "\" fill=\"" << c << "\">" << xml_escape(r.name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg(const std::string& path, const Polygon& p, const std::vector<CenterRecord>& records,
               const std::string& title, int digits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    out << render_svg(p, records, title, digits);
    if (!out) throw Error(ErrorKind::InvalidInput, "failed writing " + path);
}

}  // namespace polycenter
