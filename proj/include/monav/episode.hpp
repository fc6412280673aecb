#pragma once

#include <string>
#include <vector>

#include "monav/scene.hpp"

namespace monav {

enum class TaskMode { MultiOn, ObjectNav };
enum class Split { Train, Val, Test };

std::string to_string(TaskMode m);
std::string to_string(Split s);
TaskMode task_mode_from_string(const std::string& s);
Split split_from_string(const std::string& s);

// Geodesic separation floor between inserted objects, by split.
double min_object_separation(Split s); // 0.6 train / 1.3 val+test

struct TaskConfig {
    TaskMode mode = TaskMode::MultiOn;
    int n_goals = 3;                // 1|3|5 for multion, 1 for objectnav
    int max_steps = 2500;           // 500 for objectnav
    double success_radius = 1.0;
    double forward_step = 0.25;
    double turn_angle = M_PI / 6.0; // 30 degrees
    double agent_radius = 0.1;      // 0.18 for objectnav

    static TaskConfig multion(int n_goals);
    static TaskConfig objectnav();
    void validate() const;
};

// One task instance: placements are per-episode, the scene is shared.
struct Episode {
    std::string id;
    std::string scene_id;
    uint64_t seed = 0;
    Split split = Split::Train;
    TaskConfig task;
    Pose start;
    std::vector<SceneObject> objects;    // all 8 inserted objects
    std::vector<int> goal_ids;           // ordered goal sequence, indices into objects
    std::vector<int> distractor_ids;     // the remaining m = 8 - n
    std::vector<Point> viewpoints;       // objectnav success viewpoints

    const SceneObject& goal(int k) const { return objects.at(goal_ids.at(k)); }
    int n_goals() const { return static_cast<int>(goal_ids.size()); }
};

// Rejection-sampled placements with pairwise geodesic separation at the
// split threshold. Throws PlacementFailed when the scene cannot host a
// valid episode within the attempt budget.
Episode generate_episode(const Scene& scene, const TaskConfig& task, Split split, uint64_t seed);

// Validation of the episode-generator contract against a scene.
struct EpisodeCheck {
    bool distractor_count_ok = false;  // m == 8 - n
    bool separation_ok = false;
    bool reachable_ok = false;         // start -> every goal
    double min_separation = 0.0;
    bool all_ok() const { return distractor_count_ok && separation_ok && reachable_ok; }
};
EpisodeCheck check_episode(const Scene& scene, const Episode& ep);

} // namespace monav
