#pragma once

#include "hidecover/polygon.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace fixtures {

using hidecover::Point;
using hidecover::Rational;

inline Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Point pt(int x, int y) { return pt(long{x}, long{y}); }  // beats the literal-0-as-pointer overload

inline Point pt(const char* x, const char* y) { return {Rational::parse(x), Rational::parse(y)}; }

inline std::vector<Point> points(std::initializer_list<std::pair<long, long>> xy) {
    std::vector<Point> out;
    for (auto [x, y] : xy) out.push_back(pt(x, y));
    return out;
}

inline std::vector<Point> f3() { return points({{0, 0}, {2, 4}, {4, 0}}); }
inline std::vector<Point> f4() { return points({{0, 0}, {4, 1}, {6, 4}, {5, 0}}); }
inline std::vector<Point> f5() { return points({{0, 0}, {2, 2}, {3, 5}, {4, 2}, {6, 0}}); }
inline std::vector<Point> p6() { return points({{0, 0}, {3, 3}, {4, 6}, {5, 3}, {8, 0}, {4, 1}}); }

inline hidecover::FunnelPolygon funnel(std::vector<Point> v, std::size_t apex) {
    return {hidecover::Polygon::trusted(std::move(v)), apex};
}

}  // namespace fixtures
