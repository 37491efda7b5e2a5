#pragma once

#include <cmath>

#include "razeplan/grid.hpp"

namespace razeplan {

// Continuous point in cell-center coordinates: the center of cell (x, y)
// is the point (x, y), so distances between cell centers equal distances
// between their integer indices.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Segment {
    Point a;
    Point b;
};

inline double euclid(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double euclid(Cell a, Cell b) {
    return std::hypot(double(a.x - b.x), double(a.y - b.y));
}

inline Point center(Cell c) { return Point{double(c.x), double(c.y)}; }

// Distance from p to the closest point of the closed segment.
double point_segment_distance(Point p, const Segment& seg);

// True iff the straight segment between the centers of a and b crosses the
// interior of no blocked cell. Contact of measure zero (the segment grazing
// a corner or an edge of a blocked cell) does not block, with one exception:
// passing exactly between two diagonally adjacent blocked cells is treated
// as blocked, since that gap has zero width. All tests use exact integer
// arithmetic, so the result is platform independent.
bool line_of_sight(const Grid& grid, Cell a, Cell b);

}  // namespace razeplan
