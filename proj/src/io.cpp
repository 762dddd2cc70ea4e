#include "hidecover/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hidecover {

namespace {

using nlohmann::json;

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Rational coordinate(std::string_view s, std::size_t line) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
}

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back(point_json(p));
    return a;
}

Point point_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(0, "point must be a pair of rational strings");
    return {coordinate(j[0].get<std::string>(), 0), coordinate(j[1].get<std::string>(), 0)};
}

std::vector<Point> points_from(const json& j) {
    if (!j.is_array()) throw ParseError(0, "expected a list of points");
    std::vector<Point> out;
    for (const json& p : j) out.push_back(point_from(p));
    return out;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::optional<bool> bool_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<bool>();
}

}  // namespace

std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> pts;
    std::optional<std::size_t> expected;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto f = fields(line);
        if (f.empty()) continue;
        if (!expected) {
            std::size_t n = 0;
            auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), n);
            if (f.size() != 1 || ec != std::errc() || ptr != f[0].data() + f[0].size())
                throw ParseError(line_no, "expected the vertex count");
            expected = n;
            continue;
        }
        if (pts.size() == *expected) throw ParseError(line_no, "more vertices than declared");
        if (f.size() != 2) throw ParseError(line_no, "expected two coordinates");
        pts.push_back({coordinate(f[0], line_no), coordinate(f[1], line_no)});
    }
    if (!expected) throw ParseError(line_no, "missing vertex count");
    if (pts.size() != *expected)
        throw ParseError(line_no, "declared " + std::to_string(*expected) + " vertices, found " +
                                      std::to_string(pts.size()));
    return pts;
}

Polygon parse_polygon(std::string_view text, bool validate) {
    std::vector<Point> pts = parse_points(text);
    if (validate) return normalize_strict(validate_simple(std::move(pts)));
    if (signed_area2(pts).sign() > 0) std::reverse(pts.begin() + 1, pts.end());
    return Polygon::trusted(std::move(pts));
}

std::string format_polygon(const std::vector<Point>& vertices) {
    std::ostringstream out;
    out << vertices.size() << '\n';
    for (const Point& p : vertices) out << p.x.str() << ' ' << p.y.str() << '\n';
    return out.str();
}

std::string to_json(const SolutionDocument& doc) {
    const Solution& s = doc.solution;
    json hidden{{"points", points_json(s.hidden.points)}};
    if (s.hidden.vertices) {
        json ids = json::array();
        for (std::size_t v : *s.hidden.vertices) ids.push_back(v + 1);
        hidden["vertices"] = ids;
    }
    json pieces = json::array();
    for (const ConvexPiece& piece : s.cover.pieces) pieces.push_back(points_json(piece.vertices));
    json j{
        {"polygon", {{"source", doc.source}, {"vertices", points_json(doc.polygon)}}},
        {"class", doc.polygon_class},
        {"mode", s.cover.mode == CoverMode::Full ? "full-cover" : "vertex-cover"},
        {"hidden", hidden},
        {"cover", pieces},
        {"split_point", s.split_point ? point_json(*s.split_point) : json(nullptr)},
        {"stats", {{"predicates", s.stats.predicates}, {"elapsed_ms", doc.elapsed_ms}}},
        {"verification",
         {{"hidden_set", optional_bool(doc.verdicts.hidden_set)},
          {"cover", optional_bool(doc.verdicts.cover)},
          {"homestead", optional_bool(doc.verdicts.homestead)},
          {"violations", doc.verdicts.violations}}},
    };
    return j.dump(2) + "\n";
}

SolutionDocument solution_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    SolutionDocument doc;
    try {
        doc.source = j.at("polygon").value("source", "");
        doc.polygon = points_from(j.at("polygon").at("vertices"));
        doc.polygon_class = j.value("class", "");
        Solution& s = doc.solution;
        const std::string mode = j.at("mode").get<std::string>();
        if (mode != "full-cover" && mode != "vertex-cover") throw ParseError(0, "unknown cover mode '" + mode + "'");
        s.cover.mode = mode == "full-cover" ? CoverMode::Full : CoverMode::Vertex;
        const json& hidden = j.at("hidden");
        s.hidden.points = points_from(hidden.at("points"));
        if (hidden.contains("vertices")) {
            std::vector<std::size_t> ids;
            for (const json& v : hidden.at("vertices")) {
                const auto id = v.get<std::size_t>();
                if (id == 0) throw ParseError(0, "vertex indices are 1-based");
                ids.push_back(id - 1);
            }
            s.hidden.vertices = std::move(ids);
        }
        for (const json& piece : j.at("cover")) s.cover.pieces.push_back({points_from(piece)});
        if (j.contains("split_point") && !j.at("split_point").is_null()) s.split_point = point_from(j.at("split_point"));
        if (j.contains("stats")) {
            s.stats.predicates = j.at("stats").value("predicates", std::uint64_t{0});
            doc.elapsed_ms = j.at("stats").value("elapsed_ms", 0.0);
        }
        if (j.contains("verification")) {
            const json& v = j.at("verification");
            doc.verdicts.hidden_set = bool_from(v.value("hidden_set", json(nullptr)));
            doc.verdicts.cover = bool_from(v.value("cover", json(nullptr)));
            doc.verdicts.homestead = bool_from(v.value("homestead", json(nullptr)));
            doc.verdicts.violations = v.value("violations", std::size_t{0});
        }
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
    return doc;
}

}  // namespace hidecover
