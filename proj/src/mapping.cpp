#include "monav/mapping.hpp"

#include <algorithm>
#include <cmath>

namespace monav {

namespace {
constexpr int kGrowBlock = 16; // cells added per growth step
constexpr double kRayEps = 1e-6;

inline bool occ_blocked(uint8_t v) { return v == OccObstacle || v == OccCollision; }
} // namespace

MaskGrid dilate_obstacles_serial(const Grid<uint8_t>& occ, int radius) {
    MaskGrid free(occ.rows(), occ.cols(), 1);
    for (int r = 0; r < occ.rows(); ++r) {
        for (int c = 0; c < occ.cols(); ++c) {
            bool blocked = false;
            for (int dr = -radius; dr <= radius && !blocked; ++dr) {
                for (int dc = -radius; dc <= radius && !blocked; ++dc) {
                    const int nr = r + dr;
                    const int nc = c + dc;
                    if (occ.in_bounds(nr, nc) && occ_blocked(occ.at(nr, nc))) blocked = true;
                }
            }
            free.at(r, c) = blocked ? 0 : 1;
        }
    }
    return free;
}

MaskGrid dilate_obstacles(const Grid<uint8_t>& occ, int radius) {
    const int rows = occ.rows();
    const int cols = occ.cols();
    MaskGrid free(rows, cols, 1);
    if (radius == 0) {
        #pragma omp parallel for schedule(static)
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                free.at(r, c) = occ_blocked(occ.at(r, c)) ? 0 : 1;
            }
        }
        return free;
    }

    // Separable Chebyshev dilation: row pass then column pass.
    MaskGrid row_blocked(rows, cols, 0);
    #pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            uint8_t blocked = 0;
            const int c0 = std::max(0, c - radius);
            const int c1 = std::min(cols - 1, c + radius);
            for (int cc = c0; cc <= c1 && !blocked; ++cc) {
                blocked = occ_blocked(occ.at(r, cc)) ? 1 : 0;
            }
            row_blocked.at(r, c) = blocked;
        }
    }
    #pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            uint8_t blocked = 0;
            const int r0 = std::max(0, r - radius);
            const int r1 = std::min(rows - 1, r + radius);
            for (int rr = r0; rr <= r1 && !blocked; ++rr) {
                blocked = row_blocked.at(rr, c);
            }
            free.at(r, c) = blocked ? 0 : 1;
        }
    }
    return free;
}

AgentMaps::AgentMaps(double cell_size, double initial_extent_m) {
    const int half = std::max(1, static_cast<int>(std::ceil(initial_extent_m / 2.0 / cell_size)));
    const int n = 2 * half + 1;
    spec_.cell_size = cell_size;
    spec_.rows = n;
    spec_.cols = n;
    // center cell's center sits exactly on the frame origin
    spec_.origin = {-(half + 0.5) * cell_size, -(half + 0.5) * cell_size};
    labels_ = Grid<int8_t>(n, n, -1);
    occ_ = Grid<uint8_t>(n, n, OccUnknown);
    label_counts_.assign(object_categories().size(), 0);
}

void AgentMaps::ensure_contains(Point p) {
    // one cell of margin so boundary clamping never lands on the rim
    const double cs = spec_.cell_size;
    int grow_left = 0, grow_right = 0, grow_down = 0, grow_up = 0;
    while (p.x < spec_.origin.x - grow_left * cs + cs) grow_left += kGrowBlock;
    while (p.x > spec_.origin.x + (spec_.cols + grow_right) * cs - cs) grow_right += kGrowBlock;
    while (p.y < spec_.origin.y - grow_down * cs + cs) grow_down += kGrowBlock;
    while (p.y > spec_.origin.y + (spec_.rows + grow_up) * cs - cs) grow_up += kGrowBlock;
    if (!grow_left && !grow_right && !grow_down && !grow_up) return;

    const int new_rows = spec_.rows + grow_down + grow_up;
    const int new_cols = spec_.cols + grow_left + grow_right;
    Grid<int8_t> new_labels(new_rows, new_cols, -1);
    Grid<uint8_t> new_occ(new_rows, new_cols, OccUnknown);
    for (int r = 0; r < spec_.rows; ++r) {
        for (int c = 0; c < spec_.cols; ++c) {
            new_labels.at(r + grow_down, c + grow_left) = labels_.at(r, c);
            new_occ.at(r + grow_down, c + grow_left) = occ_.at(r, c);
        }
    }
    labels_ = std::move(new_labels);
    occ_ = std::move(new_occ);
    spec_.rows = new_rows;
    spec_.cols = new_cols;
    spec_.origin.x -= grow_left * spec_.cell_size;
    spec_.origin.y -= grow_down * spec_.cell_size;
}

void AgentMaps::set_occ(GridIndex i, uint8_t value) {
    uint8_t& cell = occ_.at(i);
    if (cell == OccCollision) return; // pessimistic: collisions stick
    if (value == OccFree && cell == OccObstacle) return;
    cell = value;
}

void AgentMaps::integrate(const Observation& obs, const std::vector<Detection>& detections) {
    const Point pos = obs.pose.position();
    const double heading = obs.pose.heading;
    ensure_contains(pos);

    for (const DepthRay& ray : obs.depth) {
        const double dir = heading + ray.bearing;
        const Point d{std::cos(dir), std::sin(dir)};
        const Point end = pos + (ray.dist + spec_.cell_size) * d;
        ensure_contains(end);

        for (const TraversedCell& tc : supercover_cells(spec_, pos, pos + ray.dist * d)) {
            // Free marks need a positive chord strictly before the hit.
            if (tc.t_exit - tc.t_enter <= kRayEps) continue;
            if (tc.t_exit > ray.dist - kRayEps) continue;
            set_occ(tc.cell, OccFree);
        }
        if (ray.hit) {
            const Point inside = pos + (ray.dist + kRayEps) * d;
            set_occ(spec_.world_to_grid(inside), OccObstacle);
        }
    }

    for (const Detection& det : detections) {
        const double dir = heading + det.bearing;
        const Point p = pos + det.range * Point{std::cos(dir), std::sin(dir)};
        ensure_contains(p);
        const GridIndex cell = spec_.world_to_grid(p);
        int8_t& label = labels_.at(cell);
        if (label == det.category) continue;
        if (label >= 0) --label_counts_[label];
        label = static_cast<int8_t>(det.category);
        ++label_counts_[det.category];
    }
}

void AgentMaps::record_collision(const Pose& pose, double forward_step) {
    const Point ahead = pose.position() + forward_step * pose.forward();
    ensure_contains(ahead);
    occ_.at(spec_.world_to_grid(ahead)) = OccCollision;
}

MaskGrid AgentMaps::planning_mask(int dilation_radius) const {
    return dilate_obstacles(occ_, dilation_radius);
}

bool AgentMaps::has_label(int category) const {
    return category >= 0 && category < static_cast<int>(label_counts_.size()) &&
           label_counts_[category] > 0;
}

std::vector<GridIndex> AgentMaps::query_goal_cells(int category) const {
    std::vector<GridIndex> cells;
    for (int r = 0; r < labels_.rows(); ++r) {
        for (int c = 0; c < labels_.cols(); ++c) {
            if (labels_.at(r, c) == category) cells.push_back({r, c});
        }
    }
    return cells;
}

size_t AgentMaps::explored_cells() const {
    size_t n = 0;
    for (uint8_t v : occ_.data()) n += (v != OccUnknown);
    return n;
}

size_t AgentMaps::labeled_cells() const {
    size_t n = 0;
    for (int8_t v : labels_.data()) n += (v >= 0);
    return n;
}

} // namespace monav
