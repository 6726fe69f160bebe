#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "polycenter/error.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter {

// One polygon per file:
//   { "name": "square", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]] }
// or
//   { "name": "square", "distances": [[0, 1, 1.414..., 1], ...] }
// Exactly one of "vertices" / "distances" must be present; "name" is optional.
struct PolygonDocument {
    std::string name;
    std::optional<Polygon> vertices;
    std::optional<DistanceMatrix> distances;
};

// Throws InvalidInput with a JSON-path diagnostic on schema violations.
PolygonDocument document_from_json(const nlohmann::json& j);
PolygonDocument read_document(std::istream& in);
PolygonDocument load_document(const std::string& path);

// Numbers rounded to `digits` significant digits; 17 reproduces every double.
nlohmann::ordered_json document_to_json(const PolygonDocument& doc, int digits = 17);
void write_document(std::ostream& out, const PolygonDocument& doc, int digits = 17);

// Rounds to `digits` significant digits; -0 becomes 0.
double round_significant(double v, int digits);
// printf("%.*g") with the same -0 rule.
std::string format_number(double v, int digits);

struct CenterError {
    ErrorKind kind;
    std::string message;
};

struct CenterRecord {
    std::string name;
    std::optional<std::vector<double>> coords;
    std::optional<std::vector<double>> weights;
    std::optional<Point2> point;
    std::optional<CenterError> error;
    // Extra diagnostics (iterations, residual, radius, ...).
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

nlohmann::ordered_json record_to_json(const CenterRecord& r, int digits);

// Deterministic SVG: polygon outline plus one labelled marker per record
// with a point; viewBox is the bounding box with a 10% margin, y pointing up.
std::string render_svg(const Polygon& p, const std::vector<CenterRecord>& records, const std::string& title = "",
                       int digits = 12);
void write_svg(const std::string& path, const Polygon& p, const std::vector<CenterRecord>& records,
               const std::string& title = "", int digits = 12);

}  // namespace polycenter
