#pragma once

#include "hidecover/solvers.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hidecover {

// Polygon text: a vertex count, then one "x y" line per vertex with each
// coordinate an integer or a/b.  Blank lines and '#' comments are ignored.
// Throws ParseError carrying the 1-based line number.
std::vector<Point> parse_points(std::string_view text);

// parse_points, then validate_simple and normalize_strict.  With
// validate=false only the winding is fixed (for timing runs on trusted input).
Polygon parse_polygon(std::string_view text, bool validate = true);

std::string format_polygon(const std::vector<Point>& vertices);

struct Verdicts {
    std::optional<bool> hidden_set;
    std::optional<bool> cover;
    std::optional<bool> homestead;
    std::size_t violations = 0;
};

struct SolutionDocument {
    std::string source;  // input path, if any
    std::vector<Point> polygon;
    std::string polygon_class;
    Solution solution;
    double elapsed_ms = 0;
    Verdicts verdicts;
};

// JSON with every rational as a string; hidden vertex indices are 1-based.
std::string to_json(const SolutionDocument& doc);
// Throws ParseError on malformed documents.
SolutionDocument solution_from_json(std::string_view text);

std::string render_svg(const SolutionDocument& doc);

}  // namespace hidecover
