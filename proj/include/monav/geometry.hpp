#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "monav/errors.hpp"
#include "monav/grid.hpp"

namespace monav {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = 1.4142135623730951;

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}

// Wraps an angle into [-pi, pi).
inline double wrap_signed(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    return a - M_PI;
}

// Planar pose; heading is CCW from +x, normalized to [0, 2*pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Point position() const { return {x, y}; }
    Point forward() const { return {std::cos(heading), std::sin(heading)}; }
    bool operator==(const Pose&) const = default;
};

// Geometry of a grid: cell size in meters plus the world position of the
// (row 0, col 0) cell corner. Rows index +y, cols index +x.
struct GridSpec {
    double cell_size = 0.2;
    int rows = 0;
    int cols = 0;
    Point origin{0.0, 0.0};

    double width() const { return cols * cell_size; }
    double height() const { return rows * cell_size; }

    bool contains(Point p) const {
        return p.x >= origin.x && p.x <= origin.x + width() &&
               p.y >= origin.y && p.y <= origin.y + height();
    }

    // Floor binning; points on the exact max extent clamp to the last cell.
    // Throws OutOfBounds for points outside the extent.
    GridIndex world_to_grid(Point p) const;

    Point cell_center(GridIndex i) const {
        return {origin.x + (i.col + 0.5) * cell_size,
                origin.y + (i.row + 0.5) * cell_size};
    }
    Point cell_corner(GridIndex i) const {
        return {origin.x + i.col * cell_size, origin.y + i.row * cell_size};
    }

    bool operator==(const GridSpec&) const = default;
};

// One cell visited by a ray, with the chord of the segment inside it.
// t_enter/t_exit are distances in meters along the segment. Corner-touching
// cells appear with t_enter == t_exit.
struct TraversedCell {
    GridIndex cell;
    double t_enter = 0.0;
    double t_exit = 0.0;
};

// Supercover traversal: every cell whose closed square the segment [from, to]
// intersects, ordered by entry distance. Both endpoints must be inside the
// grid extent.
std::vector<TraversedCell> supercover_cells(const GridSpec& spec, Point from, Point to);

struct RayHit {
    bool blocked = false;
    GridIndex cell{-1, -1};   // first obstacle cell along the segment
    double t = kInf;          // distance in meters to that cell's entry point
};

// Walks the segment with supercover traversal and reports the first obstacle
// cell, or clear. `from` must lie inside the grid.
RayHit raycast(const MaskGrid& obstacles, const GridSpec& spec, Point from, Point to);

// A distance-to-source field over navigable cells (meters; kInf where
// unreachable). 8-connected with sqrt(2) diagonal cost.
struct DistanceField {
    Grid<double> dist;

    double at(GridIndex i) const { return dist.at(i); }
    bool reachable(GridIndex i) const { return dist.at(i) < kInf; }
};

DistanceField geodesic_field(const MaskGrid& navigable, const GridSpec& spec, GridIndex source);

// Shortest obstacle-respecting distance between two points, Dijkstra on the
// 8-connected navigable grid. nullopt when no path exists (or an endpoint
// cell is not navigable).
std::optional<double> geodesic_distance(const MaskGrid& navigable, const GridSpec& spec,
                                        Point a, Point b);

// Flood fill over a mask, 4-connected; returns component id per cell
// (-1 for cells where mask == 0) and the number of components.
std::pair<Grid<int>, int> connected_components(const MaskGrid& mask);

} // namespace monav
