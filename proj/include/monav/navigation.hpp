#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monav/planning.hpp"
#include "monav/scene.hpp"
#include "monav/simulator.hpp"

namespace monav {

enum class NavBackend { SpfOracle, Bfs, Fmm };

std::string to_string(NavBackend b);
NavBackend nav_backend_from_string(const std::string& s);

struct NavigatorConfig {
    NavBackend backend = NavBackend::SpfOracle;
    int dilation_radius = 1;
    int replan_every = 5;
    double reach_tolerance = 0.25;  // waypoint pop distance
    double found_trigger = 0.8;     // inside the 1 m success radius

    void validate() const;
};

struct PathPlan {
    bool found = false;
    std::vector<GridIndex> cells;  // 8-adjacent chain, start cell -> goal cell
    std::vector<Point> waypoints;  // line-of-sight smoothed polyline
    double length_m = 0.0;         // metric length of the smoothed polyline

    explicit operator bool() const { return found; }
};

// Minimum-hop 8-connected breadth-first plan. A blocked goal snaps to the
// nearest free cell within 5 cells; returns !found when unreachable.
PathPlan plan_bfs(const MaskGrid& free, const GridSpec& spec, GridIndex from, GridIndex to);

// Fast-marching plan: solves the unit-speed eikonal equation from the goal
// with a first-order upwind stencil, then extracts the path by steepest
// descent on the arrival-time field.
PathPlan plan_fmm(const MaskGrid& free, const GridSpec& spec, GridIndex from, GridIndex to);

// Arrival-time field on its own, for tests and analysis (kInf = unreached).
Grid<double> fmm_arrival_field(const MaskGrid& free, const GridSpec& spec, GridIndex source);

// Geodesic shortest path on the ground-truth navigable mask, ignoring agent
// maps; the stand-in upper bound for a learned point-goal policy.
// dilation_radius > 0 plans on a dilated copy of the true obstacles.
PathPlan plan_spf(const Scene& scene, Point from, Point to, int dilation_radius = 0);

// Scripted recovery: alternating turn/forward bursts, switching turn
// direction after each 6-action phase without net displacement.
struct UntrapState {
    enum class Phase { Inactive, LF, RF };
    Phase phase = Phase::Inactive;
    int emitted = 0;    // actions in the current phase
    Point anchor;       // pose at phase start

    bool active() const { return phase != Phase::Inactive; }
    void activate(Point at) {
        phase = Phase::LF;
        emitted = 0;
        anchor = at;
    }
    void deactivate() {
        phase = Phase::Inactive;
        emitted = 0;
    }
};

// Next low-level action: untrap sequence when active, otherwise steer
// toward the current waypoint (turn when the bearing error exceeds half the
// turn angle, else forward). waypoint_index advances as waypoints come
// within cfg.reach_tolerance. Returns nullopt when the plan is exhausted.
std::optional<Action> next_action(const PathPlan& plan, size_t& waypoint_index,
                                  const Pose& pose, UntrapState& untrap,
                                  const NavigatorConfig& cfg, const TaskConfig& task);

// Emits found/stop when within cfg.found_trigger of a believed task goal.
std::optional<Action> issue_found(const Pose& pose, const PlanTarget& target,
                                  const TaskConfig& task, const NavigatorConfig& cfg);

// Greedy line-of-sight shortcutting over the free mask; used by the
// planners to turn cell chains into short waypoint polylines.
std::vector<Point> smooth_path(const std::vector<GridIndex>& cells, const MaskGrid& free,
                               const GridSpec& spec);

} // namespace monav
