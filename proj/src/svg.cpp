#include "hidecover/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hidecover {

namespace {

constexpr const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f"};

std::string num(double v) {
    if (v == 0) v = 0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// SVG's y axis points down.
std::string xy(const Point& p) { return num(p.x.to_double()) + "," + num(-p.y.to_double()); }

std::string path(const std::vector<Point>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + xy(pts[i]);
    return d + " Z";
}

}  // namespace

std::string render_svg(const SolutionDocument& doc) {
    const Solution& s = doc.solution;
    std::vector<const Point*> all;
    for (const Point& p : doc.polygon) all.push_back(&p);
    for (const ConvexPiece& piece : s.cover.pieces)
        for (const Point& p : piece.vertices) all.push_back(&p);
    for (const Point& p : s.hidden.points) all.push_back(&p);
    if (s.split_point) all.push_back(&*s.split_point);

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!all.empty()) {
        x0 = x1 = all.front()->x.to_double();
        y0 = y1 = -all.front()->y.to_double();
        for (const Point* p : all) {
            x0 = std::min(x0, p->x.to_double());
            x1 = std::max(x1, p->x.to_double());
            y0 = std::min(y0, -p->y.to_double());
            y1 = std::max(y1, -p->y.to_double());
        }
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double margin = 0.05 * span;
    const double mark = 0.012 * span;
    const double stroke = 0.004 * span;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0 - margin) << ' '
        << num(y0 - margin) << ' ' << num(x1 - x0 + 2 * margin) << ' ' << num(y1 - y0 + 2 * margin) << "\">\n";
    for (std::size_t k = 0; k < s.cover.pieces.size(); ++k)
        out << "  <path class=\"piece\" d=\"" << path(s.cover.pieces[k].vertices) << "\" fill=\""
            << palette[k % std::size(palette)] << "\" fill-opacity=\"0.35\" stroke=\"" << palette[k % std::size(palette)]
            << "\" stroke-width=\"" << num(stroke / 2) << "\"/>\n";
    if (!doc.polygon.empty())
        out << "  <path class=\"polygon\" d=\"" << path(doc.polygon) << "\" fill=\"none\" stroke=\"#222\" stroke-width=\""
            << num(stroke) << "\"/>\n";
    for (const Point& p : s.hidden.points)
        out << "  <circle class=\"hidden\" cx=\"" << num(p.x.to_double()) << "\" cy=\"" << num(-p.y.to_double())
            << "\" r=\"" << num(mark) << "\" fill=\"#d62728\"/>\n";
    if (s.split_point) {
        const double cx = s.split_point->x.to_double(), cy = -s.split_point->y.to_double();
        out << "  <path class=\"split-point\" d=\"M" << num(cx - mark) << ',' << num(cy - mark) << " L" << num(cx + mark)
            << ',' << num(cy + mark) << " M" << num(cx - mark) << ',' << num(cy + mark) << " L" << num(cx + mark) << ','
            << num(cy - mark) << "\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hidecover
