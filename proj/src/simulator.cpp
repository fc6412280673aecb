#include "monav/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace monav {

std::string to_string(Action a) {
    switch (a) {
        case Action::Forward: return "forward";
        case Action::TurnLeft: return "turn_left";
        case Action::TurnRight: return "turn_right";
        case Action::Found: return "found";
        default: return "stop";
    }
}

Simulator::Simulator(const Scene& scene, const Episode& episode, SensorConfig sensors)
    : scene_(&scene), episode_(&episode), sensors_(sensors) {
    state_.pose = episode.start;
    state_.pose.heading = wrap_angle(state_.pose.heading);
}

bool Simulator::body_collides(Point p) const {
    const GridSpec& spec = scene_->spec;
    const double r = episode_->task.agent_radius;
    if (p.x - r < spec.origin.x || p.y - r < spec.origin.y ||
        p.x + r > spec.origin.x + spec.width() ||
        p.y + r > spec.origin.y + spec.height()) {
        return true;
    }
    const int r0 = std::max(0, static_cast<int>(std::floor((p.y - r - spec.origin.y) / spec.cell_size)));
    const int r1 = std::min(spec.rows - 1, static_cast<int>(std::floor((p.y + r - spec.origin.y) / spec.cell_size)));
    const int c0 = std::max(0, static_cast<int>(std::floor((p.x - r - spec.origin.x) / spec.cell_size)));
    const int c1 = std::min(spec.cols - 1, static_cast<int>(std::floor((p.x + r - spec.origin.x) / spec.cell_size)));
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            if (!scene_->obstacles.at(row, col)) continue;
            const Point corner = spec.cell_corner({row, col});
            const double cx = std::clamp(p.x, corner.x, corner.x + spec.cell_size);
            const double cy = std::clamp(p.y, corner.y, corner.y + spec.cell_size);
            if (std::hypot(cx - p.x, cy - p.y) < r) return true;
        }
    }
    return false;
}

void Simulator::set_agent_pose(const Pose& p) {
    state_.pose = {p.x, p.y, wrap_angle(p.heading)};
}

Observation Simulator::observe() const {
    Observation obs;
    obs.pose = to_start_frame(state_.pose, episode_->start);
    if (state_.goal_index < episode_->n_goals()) {
        obs.current_goal = episode_->goal(state_.goal_index).category;
    }

    const Point eye = state_.pose.position();
    const double heading = state_.pose.heading;

    for (const SceneObject& obj : episode_->objects) {
        const double range = distance(eye, obj.position);
        if (range > sensors_.range) continue;
        const double bearing =
            wrap_signed(std::atan2(obj.position.y - eye.y, obj.position.x - eye.x) - heading);
        if (std::abs(bearing) > sensors_.fov / 2.0) continue;
        if (range > 1e-9 &&
            raycast(scene_->obstacles, scene_->spec, eye, obj.position).blocked) {
            continue;
        }
        obs.visible.push_back({obj.category, obj.color, range, bearing});
    }

    obs.depth.reserve(sensors_.n_rays);
    for (int i = 0; i < sensors_.n_rays; ++i) {
        const double bearing = sensors_.n_rays == 1
            ? 0.0
            : -sensors_.fov / 2.0 + sensors_.fov * i / (sensors_.n_rays - 1);
        const double dir = heading + bearing;
        // Clip the ray to the grid extent before casting.
        Point end{eye.x + sensors_.range * std::cos(dir), eye.y + sensors_.range * std::sin(dir)};
        const GridSpec& spec = scene_->spec;
        double t_clip = 1.0;
        if (end.x < spec.origin.x) t_clip = std::min(t_clip, (spec.origin.x - eye.x) / (end.x - eye.x));
        if (end.x > spec.origin.x + spec.width()) t_clip = std::min(t_clip, (spec.origin.x + spec.width() - eye.x) / (end.x - eye.x));
        if (end.y < spec.origin.y) t_clip = std::min(t_clip, (spec.origin.y - eye.y) / (end.y - eye.y));
        if (end.y > spec.origin.y + spec.height()) t_clip = std::min(t_clip, (spec.origin.y + spec.height() - eye.y) / (end.y - eye.y));
        end = {eye.x + t_clip * (end.x - eye.x), eye.y + t_clip * (end.y - eye.y)};

        const RayHit hit = raycast(scene_->obstacles, scene_->spec, eye, end);
        DepthRay ray;
        ray.bearing = bearing;
        ray.hit = hit.blocked;
        ray.dist = hit.blocked ? hit.t : sensors_.range * t_clip;
        obs.depth.push_back(ray);
    }
    return obs;
}

StepOutcome Simulator::step(Action a) {
    if (state_.episode_over) throw Error("step() on a finished episode");
    const TaskConfig& task = episode_->task;
    if (a == Action::Found && task.mode != TaskMode::MultiOn) {
        throw ActionInvalidForMode("found is a multion action");
    }
    if (a == Action::Stop && task.mode != TaskMode::ObjectNav) {
        throw ActionInvalidForMode("stop is an objectnav action");
    }

    StepOutcome out;
    switch (a) {
        case Action::Forward: {
            const Point from = state_.pose.position();
            const Point to = from + task.forward_step * state_.pose.forward();
            // swept-disc check at sub-cell resolution
            const int samples = 6;
            bool collides = false;
            for (int i = 1; i <= samples && !collides; ++i) {
                const double t = static_cast<double>(i) / samples;
                collides = body_collides(from + t * (to - from));
            }
            if (collides) {
                out.collided = true;
            } else {
                state_.pose.x = to.x;
                state_.pose.y = to.y;
            }
            break;
        }
        case Action::TurnLeft:
            state_.pose.heading = wrap_angle(state_.pose.heading + task.turn_angle);
            break;
        case Action::TurnRight:
            state_.pose.heading = wrap_angle(state_.pose.heading - task.turn_angle);
            break;
        case Action::Found: {
            const SceneObject& goal = episode_->goal(state_.goal_index);
            const double d = distance(state_.pose.position(), goal.position);
            if (d <= task.success_radius) {
                out.goal_consumed = true;
                ++state_.goal_index;
                if (state_.goal_index >= task.n_goals) {
                    state_.episode_over = true;
                    state_.success = true;
                }
            } else {
                // A single incorrect found terminates the episode.
                state_.episode_over = true;
                state_.success = false;
            }
            break;
        }
        case Action::Stop:
            state_.episode_over = true;
            state_.success = success_check_objectnav(state_.pose, *episode_);
            break;
    }

    ++state_.steps;
    if (state_.steps >= task.max_steps) state_.episode_over = true;

    out.episode_over = state_.episode_over;
    out.obs = observe();
    return out;
}

bool success_check_objectnav(const Pose& pose, const Episode& episode) {
    for (const Point& vp : episode.viewpoints) {
        if (distance(pose.position(), vp) <= 0.1) return true;
    }
    return false;
}

} // namespace monav
