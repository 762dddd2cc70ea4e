#include "hidecover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hidecover {

namespace {

thread_local std::uint64_t tally = 0;

Orientation from_sign(int s) {
    return s > 0 ? Orientation::Left : (s < 0 ? Orientation::Right : Orientation::Collinear);
}

bool within_box(const Point& p, const Point& a, const Point& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Position of q along the line through o with direction d, in units of d.
Rational param_along(const Point& o, const Point& d, const Point& q) {
    Rational dd = d.x * d.x + d.y * d.y;
    return ((q.x - o.x) * d.x + (q.y - o.y) * d.y) / dd;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x.str() << ',' << p.y.str() << ')';
}

std::uint64_t predicate_count() { return tally; }

Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

namespace {

// Whether get_d() returns the value exactly: a dyadic rational with a short numerator.
bool exact_double(const Rational& r) {
    const mpq_class& q = r.raw();
    return mpz_popcount(q.get_den_mpz_t()) == 1 && mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 &&
           mpz_sizeinbase(q.get_den_mpz_t(), 2) < 900;
}

}  // namespace

ApproxPoint approx(const Point& p) {
    return {p.x.to_double(), p.y.to_double(), exact_double(p.x) && exact_double(p.y)};
}

Orientation orientation(const Point& a, const Point& b, const Point& c, const ApproxPoint& da,
                        const ApproxPoint& db, const ApproxPoint& dc) {
    ++tally;
    const double m = std::max({std::fabs(da.x), std::fabs(da.y), std::fabs(db.x), std::fabs(db.y),
                               std::fabs(dc.x), std::fabs(dc.y)});
    if (m > 1e-100 && m < 1e100) {
        const double d1 = db.x - da.x, d2 = dc.y - da.y, d3 = db.y - da.y, d4 = dc.x - da.x;
        const double left = d1 * d2, right = d3 * d4;
        const double det = left - right;
        // Rounding error of the determinant; inexact inputs, each within one
        // ulp of its exact value, add a term proportional to their magnitude.
        double bound = 4e-16 * (std::fabs(left) + std::fabs(right));
        if (!(da.exact && db.exact && dc.exact))
            bound += 1e-15 * (m * (std::fabs(d1) + std::fabs(d2) + std::fabs(d3) + std::fabs(d4)) +
                              std::fabs(left) + std::fabs(right) + 1e-15 * m * m);
        if (det > bound) return Orientation::Left;
        if (det < -bound) return Orientation::Right;
    }
    return from_sign(cross(a, b, c).sign());
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    return orientation(a, b, c, approx(a), approx(b), approx(c));
}

Point midpoint(const Point& a, const Point& b) {
    const Rational half = Rational(1, 2);
    return {(a.x + b.x) * half, (a.y + b.y) * half};
}

RayHit ray_edge_intersection(const Point& origin, const Point& through, const Segment& edge) {
    if (origin == through) throw std::invalid_argument("ray needs two distinct points");
    ++tally;
    const Point d{through.x - origin.x, through.y - origin.y};
    const Point e{edge.b.x - edge.a.x, edge.b.y - edge.a.y};
    const Point w{edge.a.x - origin.x, edge.a.y - origin.y};
    Rational den = d.x * e.y - d.y * e.x;

    if (den.sign() == 0) {
        if ((d.x * w.y - d.y * w.x).sign() != 0) return {};
        Rational s0 = param_along(origin, d, edge.a);
        Rational s1 = param_along(origin, d, edge.b);
        if (std::max(s0, s1) > Rational(1)) return {RayHitKind::Overlap, {}};
        return {};
    }

    Rational s = (w.x * e.y - w.y * e.x) / den;
    Rational u = (w.x * d.y - w.y * d.x) / den;
    if (s <= Rational(1) || u.sign() < 0 || u > Rational(1)) return {};
    return {RayHitKind::Hit, {origin.x + s * d.x, origin.y + s * d.y}};
}

bool on_segment(const Point& p, const Segment& s) {
    return orientation(s.a, s.b, p) == Orientation::Collinear && within_box(p, s.a, s.b);
}

bool segments_properly_intersect(const Segment& s1, const Segment& s2) {
    if (s1.a == s1.b || s2.a == s2.b) throw std::invalid_argument("zero-length segment");
    const Orientation o1 = orientation(s1.a, s1.b, s2.a);
    const Orientation o2 = orientation(s1.a, s1.b, s2.b);
    const Orientation o3 = orientation(s2.a, s2.b, s1.a);
    const Orientation o4 = orientation(s2.a, s2.b, s1.b);
    constexpr auto C = Orientation::Collinear;

    if (o1 == C && o2 == C) {
        // Same line: positive-length overlap is the only proper case.
        const Point d{s1.b.x - s1.a.x, s1.b.y - s1.a.y};
        Rational t0 = param_along(s1.a, d, s2.a);
        Rational t1 = param_along(s1.a, d, s2.b);
        Rational lo = std::max(Rational(0), std::min(t0, t1));
        Rational hi = std::min(Rational(1), std::max(t0, t1));
        return lo < hi;
    }
    auto straddles = [](Orientation p, Orientation q) {
        return p == C || q == C || p != q;
    };
    if (!straddles(o1, o2) || !straddles(o3, o4)) return false;
    const bool endpoint_of_s2 = o1 == C || o2 == C;
    const bool endpoint_of_s1 = o3 == C || o4 == C;
    return !(endpoint_of_s1 && endpoint_of_s2);
}

}  // namespace hidecover
