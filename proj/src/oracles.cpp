#include "hidecover/oracles.hpp"

#include "bbox.hpp"
#include "hidecover/visibility.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace hidecover {

void VerificationReport::merge(VerificationReport other) {
    for (Violation& v : other.violations) violations.push_back(std::move(v));
}

namespace {

// A cover piece with cached double approximations for filtered predicates.
struct Piece {
    const std::vector<Point>* pts;
    std::vector<ApproxPoint> approx;
    detail::Box box;

    std::size_t size() const { return pts->size(); }
    Orientation side(std::size_t i, const Point& q, const ApproxPoint& dq) const {
        const std::size_t j = (i + 1) % size();
        return orientation((*pts)[i], (*pts)[j], q, approx[i], approx[j], dq);
    }
};

Piece make_piece(const std::vector<Point>& pts) {
    Piece out{&pts, {}, {}};
    for (const Point& p : pts) {
        out.approx.push_back(approx(p));
        out.box.add(p);
    }
    return out;
}

// Closed containment in a clockwise convex piece.
bool piece_contains(const Piece& piece, const Point& q, const ApproxPoint& dq) {
    for (std::size_t i = 0; i < piece.size(); ++i)
        if (piece.side(i, q, dq) == Orientation::Left) return false;
    return true;
}

bool is_convex_clockwise(const Piece& piece) {
    const std::size_t m = piece.size();
    if (m < 3 || signed_area2(*piece.pts).sign() >= 0) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = (i + 2) % m;
        if (piece.side(i, (*piece.pts)[k], piece.approx[k]) == Orientation::Left) return false;
    }
    return true;
}

// True when some edge of `a` has all of `b` on its outer side (closed).
bool separated_by_edge_of(const Piece& a, const Piece& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool all_out = true;
        for (std::size_t k = 0; all_out && k < b.size(); ++k)
            all_out = a.side(i, (*b.pts)[k], b.approx[k]) != Orientation::Right;
        if (all_out) return true;
    }
    return false;
}

struct PieceChecks {
    std::vector<Piece> pieces;
    std::vector<bool> usable;  // convex and inside
};

PieceChecks check_pieces(const PolygonIndex& index, const ConvexCover& c, VerificationReport& report) {
    PieceChecks out;
    for (std::size_t k = 0; k < c.pieces.size(); ++k) {
        const std::vector<Point>& pts = c.pieces[k].vertices;
        out.pieces.push_back(make_piece(pts));
        bool ok = is_convex_clockwise(out.pieces.back());
        if (!ok) report.violations.push_back({"non-convex", pts, k});
        bool inside = std::all_of(pts.begin(), pts.end(), [&](const Point& q) { return index.contains(q); });
        for (std::size_t i = 0; inside && i < pts.size(); ++i)
            inside = index.sees(pts[i], pts[(i + 1) % pts.size()]);
        if (!inside) report.violations.push_back({"outside", pts, k});
        out.usable.push_back(ok && inside);
    }
    return out;
}

bool covered(const PieceChecks& checks, const Point& q) {
    const ApproxPoint dq = approx(q);
    for (const Piece& piece : checks.pieces)
        if (piece.box.may_contain(dq.x, dq.y) && piece_contains(piece, q, dq)) return true;
    return false;
}

void require_coverage(const PieceChecks& checks, const Point& q, VerificationReport& report) {
    if (!covered(checks, q)) report.violations.push_back({"uncovered", {q}, std::nullopt});
}

// Seeded points of the closed polygon, drawn uniformly from its bounding box
// on a 2^-32 grid and kept when inside.
std::vector<Point> sample_points(const PolygonIndex& index, std::size_t count, std::uint64_t seed) {
    const Polygon& p = index.polygon();
    Rational x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
    for (const Point& v : p.vertices()) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    std::mt19937_64 rng(seed);
    const mpz_class grid = mpz_class(1) << 32;
    auto draw = [&](const Rational& lo, const Rational& hi) {
        return lo + (hi - lo) * Rational(mpz_class(static_cast<unsigned long>(rng() >> 32)), grid);
    };
    std::vector<Point> out;
    for (std::size_t tries = 0; out.size() < count && tries < 50 * count + 100; ++tries) {
        Point q{draw(x0, x1), draw(y0, y1)};
        if (index.contains(q)) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

VerificationReport check_hidden_set(const Polygon& p, const HiddenSet& h) {
    PolygonIndex index(p);
    for (const Point& q : h.points)
        if (!index.contains(q)) throw OutsidePolygon("hidden point lies outside the polygon");
    std::vector<PolygonIndex::Anchor> anchors;
    for (const Point& q : h.points) anchors.push_back(index.anchor(q));
    VerificationReport report;
    for (std::size_t i = 0; i < h.points.size(); ++i)
        for (std::size_t j = i + 1; j < h.points.size(); ++j)
            if (index.sees_from_inside(anchors[i], anchors[j]))
                report.violations.push_back({"visible-pair", {h.points[i], h.points[j]}, std::nullopt});
    return report;
}

VerificationReport check_cover(const Polygon& p, const ConvexCover& c, std::size_t samples, std::uint64_t seed) {
    PolygonIndex index(p);
    VerificationReport report;
    const PieceChecks checks = check_pieces(index, c, report);

    for (std::size_t a = 0; a < c.pieces.size(); ++a)
        for (std::size_t b = a + 1; b < c.pieces.size(); ++b) {
            const Piece& pa = checks.pieces[a];
            const Piece& pb = checks.pieces[b];
            if (!pa.box.overlaps(pb.box)) continue;
            if (!separated_by_edge_of(pa, pb) && !separated_by_edge_of(pb, pa))
                report.violations.push_back({"overlap", {}, a});
        }

    Rational area;
    for (const ConvexPiece& piece : c.pieces) area += abs(signed_area2(piece.vertices));
    if (area != abs(signed_area2(p.vertices()))) report.violations.push_back({"area", {}, std::nullopt});

    for (std::size_t i = 0; i < p.size(); ++i) {
        require_coverage(checks, p[i], report);
        require_coverage(checks, midpoint(p[i], p.next(i)), report);
    }
    for (const ConvexPiece& piece : c.pieces)
        for (const Point& q : piece.vertices) require_coverage(checks, q, report);
    for (const Point& q : sample_points(index, samples, seed)) require_coverage(checks, q, report);
    return report;
}

VerificationReport check_vertex_cover(const Polygon& p, const ConvexCover& c) {
    PolygonIndex index(p);
    VerificationReport report;
    const PieceChecks checks = check_pieces(index, c, report);
    for (const Point& v : p.vertices()) require_coverage(checks, v, report);
    return report;
}

HiddenVertexSet brute_force_hvs(const Polygon& p, std::size_t limit) {
    const std::size_t n = p.size();
    if (n > limit || n > 63)
        throw PreconditionError("brute force refused: " + std::to_string(n) + " vertices exceeds limit " +
                                std::to_string(limit));
    const VisibilityGraph g = visibility_graph(p);
    std::vector<std::uint64_t> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) seen[i] |= std::uint64_t{1} << j;

    // Include-first search in vertex order; strict improvement keeps the
    // lexicographically first maximum set.
    std::uint64_t best = 0;
    int best_size = 0;
    auto search = [&](auto&& self, std::size_t v, std::uint64_t chosen, std::uint64_t open, int size) -> void {
        if (size + std::popcount(open) <= best_size) return;
        if (open == 0) {
            best = chosen;
            best_size = size;
            return;
        }
        while (v < n && !(open >> v & 1)) ++v;
        const std::uint64_t bit = std::uint64_t{1} << v;
        self(self, v + 1, chosen | bit, open & ~bit & ~seen[v], size + 1);
        self(self, v + 1, chosen, open & ~bit, size);
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search(search, 0, 0, all, 0);

    HiddenVertexSet out;
    out.size = static_cast<std::size_t>(best_size);
    for (std::size_t i = 0; i < n; ++i)
        if (best >> i & 1) out.vertices.push_back(i);
    return out;
}

VerificationReport certify_homestead(const Polygon& p, const Solution& sol, std::size_t samples) {
    VerificationReport report = check_hidden_set(p, sol.hidden);
    report.merge(sol.cover.mode == CoverMode::Full ? check_cover(p, sol.cover, samples)
                                                   : check_vertex_cover(p, sol.cover));
    if (sol.hidden.size() != sol.cover.size()) report.violations.push_back({"size-mismatch", {}, std::nullopt});
    return report;
}

}  // namespace hidecover
