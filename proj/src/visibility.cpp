#include "hidecover/visibility.hpp"

#include "bbox.hpp"

#include <algorithm>

namespace hidecover {

namespace {

constexpr auto C = Orientation::Collinear;

}  // namespace

PolygonIndex::PolygonIndex(const Polygon& p) : poly_(p) {
    boxes_.reserve(p.size());
    approx_.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        boxes_.push_back(detail::Box::of(p[i], p.next(i)));
        approx_.push_back(approx(p[i]));
    }
}

PolygonIndex::~PolygonIndex() = default;

bool PolygonIndex::on_edge(std::size_t i, const Point& p, const ApproxPoint& dp) const {
    if (!boxes_[i].may_contain(dp.x, dp.y)) return false;
    const std::size_t j = (i + 1) % poly_.size();
    const Point& a = poly_[i];
    const Point& b = poly_[j];
    return orientation(a, b, p, approx_[i], approx_[j], dp) == C && std::min(a.x, b.x) <= p.x &&
           p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool PolygonIndex::on_boundary(const Point& p) const {
    const ApproxPoint dp = approx(p);
    for (std::size_t i = 0; i < poly_.size(); ++i)
        if (on_edge(i, p, dp)) return true;
    return false;
}

// Winding number with a rightward ray; assumes p is not on the boundary.
bool PolygonIndex::contains_unchecked_boundary(const Point& p, const ApproxPoint& dp) const {
    const std::size_t n = poly_.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const detail::Box& box = boxes_[i];
        if (box.y1 < dp.y || box.y0 > dp.y || box.x1 < dp.x) continue;
        const Point& a = poly_[i];
        const Point& b = poly_.next(i);
        const std::size_t j = (i + 1) % n;
        if (a.y <= p.y) {
            if (b.y > p.y && orientation(a, b, p, approx_[i], approx_[j], dp) == Orientation::Left) ++winding;
        } else if (b.y <= p.y && orientation(a, b, p, approx_[i], approx_[j], dp) == Orientation::Right) {
            --winding;
        }
    }
    return winding != 0;
}

bool PolygonIndex::contains(const Point& p) const {
    const ApproxPoint dp = approx(p);
    for (std::size_t i = 0; i < poly_.size(); ++i)
        if (on_edge(i, p, dp)) return true;
    return contains_unchecked_boundary(p, dp);
}

bool PolygonIndex::sees(const Point& p, const Point& q) const {
    const Anchor pa = anchor(p), qa = anchor(q);
    for (const Anchor* e : {&pa, &qa})
        if (e->edges.empty() && !contains_unchecked_boundary(e->point, e->approx))
            throw OutsidePolygon("visibility query point lies outside the polygon");
    return sees_from_inside(pa, qa);
}

PolygonIndex::Anchor PolygonIndex::anchor(const Point& p) const {
    Anchor out{p, approx(p), {}};
    for (std::size_t i = 0; i < poly_.size(); ++i)
        if (on_edge(i, p, out.approx)) out.edges.push_back(i);
    return out;
}

bool PolygonIndex::sees_from_inside(const Point& p, const Point& q) const {
    return sees_from_inside(anchor(p), anchor(q));
}

bool PolygonIndex::sees_from_inside(const Anchor& pa, const Anchor& qa) const {
    const Point& p = pa.point;
    const Point& q = qa.point;
    if (p == q) return true;
    const detail::Box seg = detail::Box::of(p, q);
    const ApproxPoint& dp = pa.approx;
    const ApproxPoint& dq = qa.approx;
    auto through = [](const Anchor& x, std::size_t i) {
        return std::find(x.edges.begin(), x.edges.end(), i) != x.edges.end();
    };
    const std::size_t n = poly_.size();
    // An endpoint inside a single edge sees nothing strictly outside that edge.
    auto leaves = [&](const Anchor& e, const Point& other, const ApproxPoint& dother) {
        if (e.edges.size() != 1) return false;
        const std::size_t i = e.edges.front(), j = (i + 1) % n;
        return orientation(poly_[i], poly_[j], other, approx_[i], approx_[j], dother) == Orientation::Left;
    };
    if (leaves(pa, q, dq) || leaves(qa, p, dp)) return false;
    for (std::size_t i : pa.edges)
        if (through(qa, i)) return true;  // both on one edge

    std::vector<const Point*> touching;  // boundary vertices on the line through p and q
    for (std::size_t i = 0; i < n; ++i) {
        if (!boxes_[i].overlaps(seg)) continue;
        const Point& a = poly_[i];
        const Point& b = poly_.next(i);
        const ApproxPoint& da = approx_[i];
        const ApproxPoint& db = approx_[(i + 1) % n];
        const Orientation oa = orientation(p, q, a, dp, dq, da);
        const Orientation ob = orientation(p, q, b, dp, dq, db);
        if (oa != C && ob != C && oa != ob) {
            const Orientation op = through(pa, i) ? C : orientation(a, b, p, da, db, dp);
            if (op != C) {
                const Orientation oq = through(qa, i) ? C : orientation(a, b, q, da, db, dq);
                if (oq != C && op != oq) return false;  // transversal crossing
            }
        }
        if (oa == C) touching.push_back(&a);
        if (ob == C) touching.push_back(&b);
    }

    // With the open segment clear of the boundary, an endpoint inside a single
    // edge tells which side the whole segment is on.
    if (touching.empty()) {
        for (const Anchor* e : {&pa, &qa}) {
            if (e->edges.size() != 1) continue;
            const std::size_t i = e->edges.front();
            const std::size_t j = (i + 1) % n;
            const Point& other = e == &pa ? q : p;
            const ApproxPoint& dother = e == &pa ? dq : dp;
            return orientation(poly_[i], poly_[j], other, approx_[i], approx_[j], dother) != Orientation::Left;
        }
    }

    // Vertices on the segment split it; every gap's midpoint must be inside.
    const Point d{q.x - p.x, q.y - p.y};
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    if (!touching.empty()) {
        const Rational dd = d.x * d.x + d.y * d.y;
        for (const Point* v : touching) {
            Rational t = ((v->x - p.x) * d.x + (v->y - p.y) * d.y) / dd;
            if (t.sign() > 0 && t < Rational(1)) cuts.push_back(std::move(t));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    }
    const Rational half(1, 2);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational t = (cuts[i] + cuts[i + 1]) * half;
        if (!contains({p.x + t * d.x, p.y + t * d.y})) return false;
    }
    return true;
}

bool point_in_polygon(const Point& p, const Polygon& poly) { return PolygonIndex(poly).contains(p); }

bool sees(const Point& p, const Point& q, const Polygon& poly) { return PolygonIndex(poly).sees(p, q); }

std::size_t VisibilityGraph::edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) e += adjacent(i, j);
    return e;
}

VisibilityGraph visibility_graph(const Polygon& poly) {
    PolygonIndex index(poly);
    VisibilityGraph g(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = i + 1; j < poly.size(); ++j)
            if (index.sees(poly[i], poly[j])) g.connect(i, j);
    return g;
}

}  // namespace hidecover
