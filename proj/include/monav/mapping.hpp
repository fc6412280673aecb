#pragma once

#include <vector>

#include "monav/perception.hpp"

namespace monav {

enum Occ : uint8_t { OccUnknown = 0, OccFree = 1, OccObstacle = 2, OccCollision = 3 };

// Planning mask over an occupancy grid: Chebyshev dilation of
// obstacle+collision cells by `radius`. Returns 1 = traversable; unknown
// cells stay traversable so plans can run through unexplored space.
// OpenMP-parallel separable implementation.
MaskGrid dilate_obstacles(const Grid<uint8_t>& occ, int radius);
// Naive windowed reference, kept for testing the parallel kernel.
MaskGrid dilate_obstacles_serial(const Grid<uint8_t>& occ, int radius);

// Persistent top-down maps built by the agent, in the GPS+Compass frame
// (origin = episode start). The grid auto-grows in whole blocks when
// projections land outside; the start stays on a cell center so map cells
// line up with the world lattice.
class AgentMaps {
public:
    explicit AgentMaps(double cell_size = 0.2, double initial_extent_m = 4.0);

    const GridSpec& spec() const { return spec_; }
    const Grid<int8_t>& labels() const { return labels_; }
    const Grid<uint8_t>& occupancy() const { return occ_; }

    // Projects a step's observation: depth rays mark free/obstacle cells,
    // detections splat category labels (newest label wins, labels persist).
    void integrate(const Observation& obs, const std::vector<Detection>& detections);

    // Marks the cell one forward-step ahead of the agent; collision cells
    // are never cleared afterwards.
    void record_collision(const Pose& pose, double forward_step);

    MaskGrid planning_mask(int dilation_radius) const;

    bool has_label(int category) const;
    std::vector<GridIndex> query_goal_cells(int category) const;

    size_t explored_cells() const;
    size_t labeled_cells() const;
    double cell_area() const { return spec_.cell_size * spec_.cell_size; }

    // Expands the grid so p (in map frame) lies strictly inside.
    void ensure_contains(Point p);

private:
    GridSpec spec_;
    Grid<int8_t> labels_; // -1 = unlabeled
    Grid<uint8_t> occ_;
    std::vector<int> label_counts_;

    void set_occ(GridIndex i, uint8_t value);
};

} // namespace monav
