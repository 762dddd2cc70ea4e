#include "hidecover/generators.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace hidecover {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// `parts` positive integers summing to total.
std::vector<std::int64_t> composition(Rng& rng, std::int64_t total, std::size_t parts) {
    std::vector<std::int64_t> cuts(static_cast<std::size_t>(total - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    for (std::size_t i = 0; i + 1 < parts; ++i) {
        const auto j = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(i),
                                                        static_cast<std::int64_t>(cuts.size()) - 1));
        std::swap(cuts[i], cuts[j]);
    }
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::int64_t> out;
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

struct IntPoint {
    std::int64_t x, y;
};

// Clockwise funnel with convex edge from the last vertex to (0,0): k edges
// rise from (0,0) to the apex getting steeper, l edges fall to (w,0).
std::vector<IntPoint> funnel_chains(Rng& rng, std::size_t k, std::size_t l) {
    static constexpr std::int64_t gaps[] = {0, 1, 3, 10};
    const std::int64_t g = gaps[uniform(rng, 0, 3)];
    const auto sk = static_cast<std::int64_t>(k), sl = static_cast<std::int64_t>(l);
    const std::int64_t height = std::max(sk, sl) * uniform(rng, 1, 3);
    const std::vector<std::int64_t> dya = composition(rng, height, k), dyb = composition(rng, height, l);

    // dx/dy strictly decreasing upward on the first chain, strictly
    // increasing on the second, so every chain vertex is reflex.
    std::vector<std::int64_t> dxa(k), dxb(l);
    dxa[k - 1] = uniform(rng, 0, g);
    for (std::size_t i = k - 1; i-- > 0;) dxa[i] = dxa[i + 1] * dya[i] / dya[i + 1] + 1 + uniform(rng, 0, g);
    dxb[l - 1] = -1 - uniform(rng, 0, g);
    for (std::size_t i = l - 1; i-- > 0;) {
        const std::int64_t num = dxb[i + 1] * dyb[i];
        const std::int64_t ceil = -((-num) / dyb[i + 1]);
        dxb[i] = ceil - 1 - uniform(rng, 0, g);
    }

    std::vector<IntPoint> v{{0, 0}};
    for (std::size_t i = 0; i < k; ++i) v.push_back({v.back().x + dxa[i], v.back().y + dya[i]});
    for (std::size_t i = l; i-- > 0;) v.push_back({v.back().x - dxb[i], v.back().y - dyb[i]});
    return v;
}

void check_range(const GenConfig& cfg, const mpz_class& value) {
    if (abs(value) > mpz_class(std::to_string(cfg.coord_range)))
        throw std::invalid_argument("generated coordinates exceed coord_range " + std::to_string(cfg.coord_range));
}

}  // namespace

FunnelPolygon gen_funnel(const GenConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("a funnel needs at least 3 vertices");
    if (cfg.coord_range < static_cast<std::int64_t>(cfg.n)) throw std::invalid_argument("coord_range must be at least n");
    Rng rng(cfg.seed);
    std::size_t l = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>((cfg.n - 1) / 2)));
    std::size_t k = cfg.n - 1 - l;
    if (rng() & 1) std::swap(k, l);

    std::vector<IntPoint> v = funnel_chains(rng, k, l);
    if (k < l) {
        // Reflect x -> w - x so the longer chain comes first; the shape stays random.
        const std::int64_t w = v.back().x;
        std::reverse(v.begin() + 1, v.end());
        for (IntPoint& q : v) q.x = w - q.x;
        std::rotate(v.begin(), v.begin() + 1, v.end());
        std::swap(k, l);
    }
    std::vector<Point> pts;
    for (const IntPoint& q : v) {
        check_range(cfg, q.x);
        check_range(cfg, q.y);
        pts.push_back({Rational(q.x), Rational(q.y)});
    }
    return {Polygon::trusted(std::move(pts)), k};
}

Pseudotriangle gen_pseudotriangle(const GenConfig& cfg) {
    const auto [n1, n2, n3] = cfg.chains;
    if (!(n1 >= n2 && n2 >= n3 && n3 >= 2))
        throw std::invalid_argument("pseudotriangle chains must satisfy n1 >= n2 >= n3 >= 2");
    Rng rng(cfg.seed);
    const std::vector<IntPoint> top = funnel_chains(rng, n1, n2);
    const IntPoint& first = top[1];
    const IntPoint& last = top.back();
    const IntPoint& before_last = top[top.size() - 2];

    // The arch may not rise faster than either chain leaves the base, which
    // keeps both base corners convex and the arch below both chains.
    const mpq_class slope_first(first.y, first.x);
    const mpq_class slope_last(before_last.y - last.y, last.x - before_last.x);
    mpq_class s = std::min(slope_first, slope_last);
    s.canonicalize();

    // Edge j of the arch, left to right, has slope s (m-1-2j)/(m+1) and width u.
    const auto m = static_cast<long>(n3);
    const mpz_class u = s.get_den() * (m + 1);
    const mpz_class arch_width = u * m;
    const mpz_class base_width = last.x;
    const mpz_class common = lcm(arch_width, base_width);
    const mpz_class scale_top = common / base_width, scale_arch = common / arch_width;

    std::vector<Point> pts;
    for (const IntPoint& q : top) {
        const mpz_class x = q.x * scale_top, y = q.y * scale_top;
        check_range(cfg, x);
        check_range(cfg, y);
        pts.emplace_back(Point{Rational(x, 1), Rational(y, 1)});
    }
    // Arch vertices from the right corner back to the left one.
    std::vector<Point> arch;
    mpz_class x = 0, y = 0;
    for (long j = 0; j + 1 < m; ++j) {
        x += u * scale_arch;
        y += s.get_num() * (m - 1 - 2 * j) * scale_arch;
        check_range(cfg, x);
        check_range(cfg, y);
        arch.push_back({Rational(x, 1), Rational(y, 1)});
    }
    pts.insert(pts.end(), arch.rbegin(), arch.rend());
    return {Polygon::trusted(std::move(pts)), n1, n1 + n2};
}

}  // namespace hidecover
