#include "monav/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace monav {

GridIndex GridSpec::world_to_grid(Point p) const {
    if (!contains(p)) {
        throw OutOfBounds("point outside grid extent");
    }
    int col = static_cast<int>(std::floor((p.x - origin.x) / cell_size));
    int row = static_cast<int>(std::floor((p.y - origin.y) / cell_size));
    col = std::clamp(col, 0, cols - 1);
    row = std::clamp(row, 0, rows - 1);
    return {row, col};
}

namespace {
constexpr double kCornerEps = 1e-9; // meters along the segment
}

std::vector<TraversedCell> supercover_cells(const GridSpec& spec, Point from, Point to) {
    GridIndex start = spec.world_to_grid(from);
    (void)spec.world_to_grid(to); // bounds check on the far endpoint

    const double length = distance(from, to);
    std::vector<TraversedCell> out;
    if (length == 0.0) {
        out.push_back({start, 0.0, 0.0});
        return out;
    }

    const double dx = (to.x - from.x) / length;
    const double dy = (to.y - from.y) / length;
    const int step_col = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
    const int step_row = dy > 0 ? 1 : (dy < 0 ? -1 : 0);

    // Distance along the segment to the next vertical / horizontal boundary.
    double tx = kInf, ty = kInf, tdx = kInf, tdy = kInf;
    if (step_col != 0) {
        const double next_x = spec.origin.x + (start.col + (step_col > 0 ? 1 : 0)) * spec.cell_size;
        tx = (next_x - from.x) / dx;
        tdx = spec.cell_size / std::abs(dx);
    }
    if (step_row != 0) {
        const double next_y = spec.origin.y + (start.row + (step_row > 0 ? 1 : 0)) * spec.cell_size;
        ty = (next_y - from.y) / dy;
        tdy = spec.cell_size / std::abs(dy);
    }

    int row = start.row;
    int col = start.col;
    double t = 0.0;
    out.push_back({start, 0.0, std::min({tx, ty, length})});

    auto touch = [&](int r, int c, double at) {
        if (r >= 0 && r < spec.rows && c >= 0 && c < spec.cols) {
            out.push_back({{r, c}, at, at});
        }
    };

    while (true) {
        const double t_next = std::min(tx, ty);
        if (t_next > length - kCornerEps) break;

        if (std::abs(tx - ty) <= kCornerEps) {
            // Exact corner crossing: the segment touches both side cells.
            touch(row, col + step_col, tx);
            touch(row + step_row, col, tx);
            col += step_col;
            row += step_row;
            t = tx;
            tx += tdx;
            ty += tdy;
        } else if (tx < ty) {
            col += step_col;
            t = tx;
            tx += tdx;
        } else {
            row += step_row;
            t = ty;
            ty += tdy;
        }
        if (row < 0 || row >= spec.rows || col < 0 || col >= spec.cols) break;
        out.push_back({{row, col}, t, std::min(std::min(tx, ty), length)});
    }
    return out;
}

RayHit raycast(const MaskGrid& obstacles, const GridSpec& spec, Point from, Point to) {
    for (const TraversedCell& tc : supercover_cells(spec, from, to)) {
        if (obstacles.at(tc.cell)) {
            return {true, tc.cell, tc.t_enter};
        }
    }
    return {};
}

DistanceField geodesic_field(const MaskGrid& navigable, const GridSpec& spec, GridIndex source) {
    DistanceField field;
    field.dist = Grid<double>(spec.rows, spec.cols, kInf);
    if (!navigable.in_bounds(source) || !navigable.at(source)) return field;

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto idx = [&](int r, int c) { return r * spec.cols + c; };

    field.dist.at(source) = 0.0;
    heap.push({0.0, idx(source.row, source.col)});

    const double axis = spec.cell_size;
    const double diag = spec.cell_size * kSqrt2;

    while (!heap.empty()) {
        auto [d, i] = heap.top();
        heap.pop();
        const int r = i / spec.cols;
        const int c = i % spec.cols;
        if (d > field.dist.at(r, c)) continue;
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const int nr = r + dr;
                const int nc = c + dc;
                if (!navigable.in_bounds(nr, nc) || !navigable.at(nr, nc)) continue;
                const double nd = d + ((dr != 0 && dc != 0) ? diag : axis);
                if (nd < field.dist.at(nr, nc)) {
                    field.dist.at(nr, nc) = nd;
                    heap.push({nd, idx(nr, nc)});
                }
            }
        }
    }
    return field;
}

std::optional<double> geodesic_distance(const MaskGrid& navigable, const GridSpec& spec,
                                        Point a, Point b) {
    const GridIndex ca = spec.world_to_grid(a);
    const GridIndex cb = spec.world_to_grid(b);
    if (!navigable.at(ca) || !navigable.at(cb)) return std::nullopt;
    if (ca == cb) return 0.0;

    // Single-target Dijkstra with early exit.
    Grid<double> dist(spec.rows, spec.cols, kInf);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    auto idx = [&](GridIndex g) { return g.row * spec.cols + g.col; };

    dist.at(ca) = 0.0;
    heap.push({0.0, idx(ca)});
    const double axis = spec.cell_size;
    const double diag = spec.cell_size * kSqrt2;

    while (!heap.empty()) {
        auto [d, i] = heap.top();
        heap.pop();
        const int r = i / spec.cols;
        const int c = i % spec.cols;
        if (d > dist.at(r, c)) continue;
        if (r == cb.row && c == cb.col) return d;
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const int nr = r + dr;
                const int nc = c + dc;
                if (!navigable.in_bounds(nr, nc) || !navigable.at(nr, nc)) continue;
                const double nd = d + ((dr != 0 && dc != 0) ? diag : axis);
                if (nd < dist.at(nr, nc)) {
                    dist.at(nr, nc) = nd;
                    heap.push({nd, i + dr * spec.cols + dc});
                }
            }
        }
    }
    return std::nullopt;
}

std::pair<Grid<int>, int> connected_components(const MaskGrid& mask) {
    Grid<int> comp(mask.rows(), mask.cols(), -1);
    int n = 0;
    std::vector<GridIndex> stack;
    for (int r = 0; r < mask.rows(); ++r) {
        for (int c = 0; c < mask.cols(); ++c) {
            if (!mask.at(r, c) || comp.at(r, c) >= 0) continue;
            stack.push_back({r, c});
            comp.at(r, c) = n;
            while (!stack.empty()) {
                GridIndex g = stack.back();
                stack.pop_back();
                const int dr4[4] = {1, -1, 0, 0};
                const int dc4[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nr = g.row + dr4[k];
                    const int nc = g.col + dc4[k];
                    if (mask.in_bounds(nr, nc) && mask.at(nr, nc) && comp.at(nr, nc) < 0) {
                        comp.at(nr, nc) = n;
                        stack.push_back({nr, nc});
                    }
                }
            }
            ++n;
        }
    }
    return {std::move(comp), n};
}

} // namespace monav
