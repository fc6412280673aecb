#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monav/episode.hpp"

namespace monav {

enum class Action { Forward, TurnLeft, TurnRight, Found, Stop };

std::string to_string(Action a);

struct SensorConfig {
    double fov = M_PI / 2.0; // 90 degree fan
    int n_rays = 64;
    double range = 5.0;
};

// Ground-truth object gated by line-of-sight / range / FOV. The perception
// module degrades this into detections; object ids are withheld.
struct VisibleObject {
    int category = -1;   // ground-truth category
    Rgb color{0, 0, 0};  // true color sample at the object
    double range = 0.0;
    double bearing = 0.0; // relative to heading, [-pi, pi)
};

struct DepthRay {
    double bearing = 0.0;
    double dist = 0.0; // meters to the first obstacle, or sensor range if clear
    bool hit = false;
};

struct Observation {
    Pose pose;                // relative to episode start (GPS+Compass frame)
    int current_goal = -1;    // category of the goal to find next
    std::vector<VisibleObject> visible;
    std::vector<DepthRay> depth;
};

struct StepOutcome {
    Observation obs;
    bool collided = false;
    bool episode_over = false;
    bool goal_consumed = false;
};

struct AgentState {
    Pose pose;       // world frame
    int steps = 0;
    int goal_index = 0;
    bool episode_over = false;
    bool success = false;
};

// GPS+Compass frame: positions relative to the episode start, headings
// absolute. Keeps agent map cells aligned with the world lattice.
inline Pose to_start_frame(const Pose& world, const Pose& start) {
    return {world.x - start.x, world.y - start.y, world.heading};
}
inline Point start_frame_to_world(Point p, const Pose& start) {
    return {p.x + start.x, p.y + start.y};
}
inline Point world_to_start_frame(Point p, const Pose& start) {
    return {p.x - start.x, p.y - start.y};
}

// Step-level simulator. Scene and episode are immutable; one simulator owns
// the rollout state for one episode at a time.
class Simulator {
public:
    Simulator(const Scene& scene, const Episode& episode, SensorConfig sensors = {});

    const AgentState& state() const { return state_; }
    const Scene& scene() const { return *scene_; }
    const Episode& episode() const { return *episode_; }
    const SensorConfig& sensors() const { return sensors_; }

    Observation observe() const;
    StepOutcome step(Action a);

    // Debug/evaluation hook; the pose must keep the body clear of obstacles.
    void set_agent_pose(const Pose& p);

    // True when a disc of the task's agent radius at p overlaps an obstacle
    // cell (or leaves the grid).
    bool body_collides(Point p) const;

private:
    const Scene* scene_;
    const Episode* episode_;
    SensorConfig sensors_;
    AgentState state_;
};

// ObjectNav success rule: pose within 0.1 m of any precomputed viewpoint.
bool success_check_objectnav(const Pose& pose, const Episode& episode);

} // namespace monav
