#include "hidecover/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hidecover {

namespace {

constexpr auto Left = Orientation::Left;
constexpr auto Right = Orientation::Right;

ConvexPiece make_piece(std::initializer_list<Point> pts) {
    ConvexPiece piece;
    for (const Point& p : pts)
        if (piece.vertices.empty() || piece.vertices.back() != p) piece.vertices.push_back(p);
    if (piece.vertices.size() > 1 && piece.vertices.front() == piece.vertices.back()) piece.vertices.pop_back();
    return piece;
}

// The two reflex chains, both listed from the convex edge towards the apex.
struct Chains {
    std::vector<Point> first;   // v_1 .. v_t
    std::vector<Point> second;  // v_n, v_{n-1}, .., v_t
};

Chains chains_of(const FunnelPolygon& f) {
    const Polygon& p = f.polygon;
    Chains c;
    for (std::size_t i = 0; i <= f.apex; ++i) c.first.push_back(p[i]);
    for (std::size_t i = p.size() - 1; i > f.apex; --i) c.second.push_back(p[i]);
    c.second.push_back(p[f.apex]);
    return c;
}

// Walk chain[from..] edges starting at `base` for the first hit of the ray.
Point hit_on_chain(const Point& origin, const Point& through, const Point& base, const std::vector<Point>& chain,
                   std::size_t from) {
    Point tail = base;
    for (std::size_t j = from; j < chain.size(); ++j) {
        RayHit hit = ray_edge_intersection(origin, through, {tail, chain[j]});
        if (hit) return hit.point;
        tail = chain[j];
    }
    throw std::logic_error("edge extension does not meet the opposite chain");
}

}  // namespace

bool strongly_visible_pair(const FunnelPolygon& f, std::size_t i) {
    const std::size_t n = f.size(), t = f.t();
    if (i < 1 || i + 1 > t || n - i < t) throw std::out_of_range("no strongly visible pair at index " + std::to_string(i));
    const Polygon& p = f.polygon;
    auto v = [&](std::size_t k) -> const Point& { return p[k - 1]; };
    return orientation(v(i), v(i + 1), v(n - i)) != Left && orientation(v(n - i + 1), v(n - i), v(i + 1)) != Right;
}

Solution solve_funnel(const FunnelPolygon& f) {
    if (!is_funnel(f.polygon, f.apex)) throw PreconditionError("input is not a strictly reflex funnel");
    PredicateTally tally;
    const Chains ch = chains_of(f);
    const std::vector<Point>& A = ch.first;
    const std::vector<Point>& B = ch.second;

    std::vector<ConvexPiece> pieces;
    std::vector<Point> hidden;  // hidden[k] belongs to pieces[k]
    // Quads whose hidden side is decided by the step that ends their run.
    struct Pending {
        Point a0, a1, b0, b1;
    };
    std::vector<Pending> run;
    auto settle = [&](bool first_side) {
        for (const Pending& q : run) hidden.push_back(first_side ? midpoint(q.a0, q.a1) : midpoint(q.b0, q.b1));
        run.clear();
    };

    Point alpha = A[0], beta = B[0];
    std::size_t ia = 1, ib = 1;
    for (;;) {
        const std::size_t ea = A.size() - ia, eb = B.size() - ib;
        if (ea == 0 || eb == 0) throw std::logic_error("funnel scan ran past the apex");
        if (ea == 1 && eb == 1) {
            settle(true);
            pieces.push_back(make_piece({alpha, A[ia], beta}));
            hidden.push_back(midpoint(alpha, A[ia]));
            break;
        }
        const Point& alpha1 = A[ia];
        const Point& beta1 = B[ib];
        if (orientation(alpha, alpha1, beta1) == Left) {
            // The first chain's edge extension clips the second chain.
            Point p = hit_on_chain(alpha, alpha1, beta, B, ib);
            settle(true);
            pieces.push_back(make_piece({alpha, alpha1, p, beta}));
            hidden.push_back(midpoint(alpha, alpha1));
            if (p == B[ib]) ++ib;
            alpha = alpha1;
            beta = std::move(p);
            ++ia;
            continue;
        }
        if (orientation(beta, beta1, alpha1) == Right) {
            Point p = hit_on_chain(beta, beta1, alpha, A, ia);
            settle(false);
            pieces.push_back(make_piece({alpha, p, beta1, beta}));
            hidden.push_back(midpoint(beta, beta1));
            if (p == A[ia]) ++ia;
            beta = beta1;
            alpha = std::move(p);
            ++ib;
            continue;
        }
        pieces.push_back(make_piece({alpha, alpha1, beta1, beta}));
        run.push_back({alpha, alpha1, beta, beta1});
        alpha = alpha1;
        beta = beta1;
        ++ia;
        ++ib;
    }

    Solution s;
    s.hidden.points = std::move(hidden);
    s.cover.pieces = std::move(pieces);
    s.cover.mode = CoverMode::Full;
    s.stats.predicates = tally.elapsed();
    return s;
}

Solution to_input_frame(Solution s, const Relabeling& relabel) {
    for (Point& p : s.hidden.points) p = relabel.to_input(p);
    if (s.hidden.vertices)
        for (std::size_t& v : *s.hidden.vertices) v = relabel.source.at(v);
    for (ConvexPiece& piece : s.cover.pieces) {
        for (Point& p : piece.vertices) p = relabel.to_input(p);
        if (relabel.mirrored) std::reverse(piece.vertices.begin(), piece.vertices.end());
    }
    if (s.split_point) s.split_point = relabel.to_input(*s.split_point);
    return s;
}

}  // namespace hidecover
