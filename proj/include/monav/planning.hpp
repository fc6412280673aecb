#pragma once

#include <optional>
#include <vector>

#include "monav/mapping.hpp"

namespace monav {

struct PlanTarget {
    enum class Kind { TaskGoal, Exploration };
    Point point;
    Kind kind = Kind::Exploration;
    std::vector<GridIndex> cluster; // member cells when kind == TaskGoal
};

// Task-goal / exploration-goal arbitration. If the current goal category is
// on the semantic map, returns the centroid of the nearest label cluster
// snapped to its nearest member cell; otherwise passes the exploration goal
// through. The exploration goal must be present when the category is absent.
PlanTarget select_target(const AgentMaps& maps, int current_goal,
                         const std::optional<Point>& exploration_goal, const Pose& pose);

// Exposed for tests: 8-connected clusters of same-label cells and centroid
// snapping.
std::vector<std::vector<GridIndex>> label_clusters(const AgentMaps& maps, int category);
GridIndex snap_centroid(const std::vector<GridIndex>& cluster);

} // namespace monav
