#include "hidecover/solvers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

// Vertex variant on a funnel.  Vertices split into the first chain X (base to
// apex) and the second chain Y (base up to the vertex before the apex).  Each
// chain is reflex, so the only visibility that matters crosses between them,
// and the Y-neighbours of each X vertex form an interval [lo, hi] whose ends
// never decrease along X.  Both the hidden set and the cover are shortest
// paths through a small layered state space over (used X prefix, used Y prefix).

namespace hidecover {

namespace {

struct Band {
    std::vector<std::size_t> x, y;     // polygon indices
    std::vector<std::size_t> lo, hi;   // per x: visible y indices
    std::vector<std::size_t> ylo, yhi; // per y: visible x indices
};

// Visibility of q from vertex v judged only by the cone at v.
bool in_cone(const Polygon& poly, std::size_t v, const Point& q) {
    const Point& u = poly.prev(v);
    const Point& p = poly[v];
    const Point& w = poly.next(v);
    const bool a = orientation(u, p, q) != Orientation::Left;
    const bool b = orientation(p, w, q) != Orientation::Left;
    return orientation(u, p, w) == Orientation::Right ? a && b : a || b;
}

bool cross_visible(const Polygon& poly, std::size_t u, std::size_t w) {
    return in_cone(poly, u, poly[w]) && in_cone(poly, w, poly[u]);
}

Band make_band(const FunnelPolygon& f) {
    const Polygon& poly = f.polygon;
    const std::size_t n = poly.size();
    Band band;
    for (std::size_t i = 0; i <= f.apex; ++i) band.x.push_back(i);
    for (std::size_t i = n - 1; i > f.apex; --i) band.y.push_back(i);

    const std::size_t k = band.x.size(), l = band.y.size();
    std::size_t j0 = 0, j1 = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (j0 < l && !cross_visible(poly, band.x[i], band.y[j0])) ++j0;
        if (j0 == l) throw std::logic_error("funnel vertex sees nothing on the opposite chain");
        j1 = std::max(j1, j0);
        while (j1 + 1 < l && cross_visible(poly, band.x[i], band.y[j1 + 1])) ++j1;
        band.lo.push_back(j0);
        band.hi.push_back(j1);
    }
    // Transpose: x_i sees y_j iff lo[i] <= j <= hi[i].
    band.ylo.assign(l, 0);
    band.yhi.assign(l, 0);
    std::size_t first = 0, last = 0;
    for (std::size_t j = 0; j < l; ++j) {
        while (first < k && band.hi[first] < j) ++first;
        while (last + 1 < k && band.lo[last + 1] <= j) ++last;
        band.ylo[j] = first;
        band.yhi[j] = last;
    }
    return band;
}

struct State {
    std::size_t a = 0, b = 0;
    std::size_t parent = 0;
    std::size_t dx = 0, dy = 0;  // step into this state: vertices picked or covered from each chain
};

// Keeps states not dominated in the given sense; the earliest of equal states wins.
template <class Better>
std::vector<State> frontier(std::vector<State> s, Better better) {
    std::stable_sort(s.begin(), s.end(), [&](const State& p, const State& q) {
        return p.a != q.a ? better(p.a, q.a) : better(p.b, q.b);
    });
    std::vector<State> out;
    for (const State& st : s)
        if (out.empty() || better(st.b, out.back().b)) out.push_back(st);
    return out;
}

// Calls pick(from, to) for each step of the path ending at layers.back()[at].
template <class Pick>
void trace(const std::vector<std::vector<State>>& layers, std::size_t at, Pick pick) {
    std::vector<std::pair<const State*, const State*>> path;
    for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
        const State& s = layers[layer][at];
        at = s.parent;
        path.emplace_back(&layers[layer - 1][at], &s);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) pick(*it->first, *it->second);
}

std::vector<std::size_t> hidden_vertices(const Band& band) {
    const std::size_t k = band.x.size(), l = band.y.size();
    // next_x[j]: first x index whose interval starts after j.
    std::vector<std::size_t> next_x(l + 1);
    for (std::size_t j = 0, i = 0; j <= l; ++j) {
        while (i < k && band.lo[i] <= j) ++i;
        next_x[j] = i;
    }
    std::vector<std::vector<State>> layers{{State{}}};
    for (;;) {
        std::vector<State> next;
        const auto& cur = layers.back();
        for (std::size_t p = 0; p < cur.size(); ++p) {
            const State& s = cur[p];
            if (s.a < k) next.push_back({s.a + 2, std::max(s.b, band.hi[s.a] + 1), p, 1, 0});
            if (s.b < l) next.push_back({std::max(s.a, next_x[s.b]), s.b + 2, p, 0, 1});
        }
        if (next.empty()) break;
        layers.push_back(frontier(std::move(next), std::less<>{}));
    }
    std::vector<std::size_t> out;
    trace(layers, 0, [&](const State& from, const State& to) {
        out.push_back(to.dx ? band.x[from.a] : band.y[from.b]);
    });
    return out;
}

struct Clique {
    std::size_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // half-open index ranges

    bool has_x() const { return x1 > x0; }
    bool has_y() const { return y1 > y0; }
};

bool sees_all_y(const Band& band, std::size_t i, const Clique& c) {
    return !c.has_y() || (band.lo[i] <= c.y0 && c.y1 - 1 <= band.hi[i]);
}

bool sees_all_x(const Band& band, std::size_t j, const Clique& c) {
    return !c.has_x() || (band.ylo[j] <= c.x0 && c.x1 - 1 <= band.yhi[j]);
}

// Grows a clique of the band to a maximal one.  Each chain contributes at
// most two consecutive vertices because chords of a reflex chain leave the
// polygon.
void expand(const Band& band, Clique& c) {
    const std::size_t k = band.x.size(), l = band.y.size();
    if (!c.has_x()) {
        std::size_t from = 0, to = k;
        for (std::size_t j = c.y0; j < c.y1; ++j) {
            from = std::max(from, band.ylo[j]);
            to = std::min(to, band.yhi[j] + 1);
        }
        if (from < to) c.x0 = from, c.x1 = from + 1;
    }
    if (!c.has_y()) {
        std::size_t from = 0, to = l;
        for (std::size_t i = c.x0; i < c.x1; ++i) {
            from = std::max(from, band.lo[i]);
            to = std::min(to, band.hi[i] + 1);
        }
        if (from < to) c.y0 = from, c.y1 = from + 1;
    }
    if (c.x1 - c.x0 == 1) {
        if (c.x1 < k && sees_all_y(band, c.x1, c)) ++c.x1;
        else if (c.x0 > 0 && sees_all_y(band, c.x0 - 1, c)) --c.x0;
    }
    if (c.y1 - c.y0 == 1) {
        if (c.y1 < l && sees_all_x(band, c.y1, c)) ++c.y1;
        else if (c.y0 > 0 && sees_all_x(band, c.y0 - 1, c)) --c.y0;
    }
}

std::vector<Clique> vertex_cover(const Band& band) {
    const std::size_t k = band.x.size(), l = band.y.size();
    auto is_clique = [&](std::size_t a, std::size_t dx, std::size_t b, std::size_t dy) {
        for (std::size_t i = a; i < a + dx; ++i)
            if (dy && (band.lo[i] > b || b + dy - 1 > band.hi[i])) return false;
        return true;
    };
    std::vector<std::vector<State>> layers{{State{}}};
    std::size_t goal = 0;
    for (;;) {
        const auto& cur = layers.back();
        auto done = std::find_if(cur.begin(), cur.end(), [&](const State& s) { return s.a == k && s.b == l; });
        if (done != cur.end()) {
            goal = static_cast<std::size_t>(done - cur.begin());
            break;
        }
        std::vector<State> next;
        for (std::size_t p = 0; p < cur.size(); ++p) {
            const State& s = cur[p];
            for (std::size_t dx = 0; dx <= 2; ++dx)
                for (std::size_t dy = 0; dy <= 2; ++dy) {
                    if (dx + dy == 0 || s.a + dx > k || s.b + dy > l) continue;
                    if (is_clique(s.a, dx, s.b, dy)) next.push_back({s.a + dx, s.b + dy, p, dx, dy});
                }
        }
        if (next.empty()) throw std::logic_error("band admits no clique cover");
        layers.push_back(frontier(std::move(next), std::greater<>{}));
    }
    std::vector<Clique> out;
    trace(layers, goal, [&](const State& from, const State& to) {
        Clique c{from.a, to.a, from.b, to.b};
        expand(band, c);
        out.push_back(c);
    });
    return out;
}

}  // namespace

Solution solve_funnel_vertices(const FunnelPolygon& f) {
    if (!is_funnel(f.polygon, f.apex)) throw PreconditionError("input is not a strictly reflex funnel");
    PredicateTally tally;
    const Polygon& poly = f.polygon;
    const Band band = make_band(f);

    Solution s;
    std::vector<std::size_t> hidden = hidden_vertices(band);
    for (std::size_t v : hidden) s.hidden.points.push_back(poly[v]);
    s.hidden.vertices = std::move(hidden);

    for (const Clique& c : vertex_cover(band)) {
        std::vector<std::size_t> ids;
        for (std::size_t i = c.x0; i < c.x1; ++i) ids.push_back(band.x[i]);
        for (std::size_t j = c.y0; j < c.y1; ++j) ids.push_back(band.y[j]);
        std::sort(ids.begin(), ids.end());
        ConvexPiece piece;
        for (std::size_t v : ids) piece.vertices.push_back(poly[v]);
        s.cover.pieces.push_back(std::move(piece));
    }
    s.cover.mode = CoverMode::Vertex;
    s.stats.predicates = tally.elapsed();
    return s;
}

}  // namespace hidecover
