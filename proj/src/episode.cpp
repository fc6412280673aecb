#include "monav/episode.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace monav {

std::string to_string(TaskMode m) {
    return m == TaskMode::MultiOn ? "multion" : "objectnav";
}
std::string to_string(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Val: return "val";
        default: return "test";
    }
}
TaskMode task_mode_from_string(const std::string& s) {
    if (s == "multion") return TaskMode::MultiOn;
    if (s == "objectnav") return TaskMode::ObjectNav;
    throw ConfigError("unknown task mode: " + s);
}
Split split_from_string(const std::string& s) {
    if (s == "train") return Split::Train;
    if (s == "val") return Split::Val;
    if (s == "test") return Split::Test;
    throw ConfigError("unknown split: " + s);
}

double min_object_separation(Split s) {
    return s == Split::Train ? 0.6 : 1.3;
}

TaskConfig TaskConfig::multion(int n_goals) {
    TaskConfig t;
    t.mode = TaskMode::MultiOn;
    t.n_goals = n_goals;
    t.max_steps = 2500;
    t.agent_radius = 0.1;
    t.validate();
    return t;
}

TaskConfig TaskConfig::objectnav() {
    TaskConfig t;
    t.mode = TaskMode::ObjectNav;
    t.n_goals = 1;
    t.max_steps = 500;
    t.agent_radius = 0.18;
    t.validate();
    return t;
}

void TaskConfig::validate() const {
    if (n_goals < 1 || n_goals > 8) throw ConfigError("n_goals must be in [1, 8]");
    if (mode == TaskMode::ObjectNav && n_goals != 1) {
        throw ConfigError("objectnav requires n_goals == 1");
    }
    if (max_steps < 1 || success_radius <= 0 || forward_step <= 0 ||
        turn_angle <= 0 || agent_radius <= 0) {
        throw ConfigError("task parameters must be positive");
    }
}

namespace {

constexpr int kMaxPlacementAttempts = 1000;
constexpr int kObjectCount = 8;

// Agent spawn needs disc clearance; checks every cell overlapped by the disc.
bool disc_clear(const Scene& scene, Point p, double radius) {
    const GridSpec& spec = scene.spec;
    if (p.x - radius < spec.origin.x || p.y - radius < spec.origin.y ||
        p.x + radius > spec.origin.x + spec.width() ||
        p.y + radius > spec.origin.y + spec.height()) {
        return false;
    }
    const int r0 = static_cast<int>(std::floor((p.y - radius - spec.origin.y) / spec.cell_size));
    const int r1 = static_cast<int>(std::floor((p.y + radius - spec.origin.y) / spec.cell_size));
    const int c0 = static_cast<int>(std::floor((p.x - radius - spec.origin.x) / spec.cell_size));
    const int c1 = static_cast<int>(std::floor((p.x + radius - spec.origin.x) / spec.cell_size));
    for (int r = std::max(0, r0); r <= std::min(spec.rows - 1, r1); ++r) {
        for (int c = std::max(0, c0); c <= std::min(spec.cols - 1, c1); ++c) {
            if (!scene.obstacles.at(r, c)) continue;
            // closest point of the cell square to the disc center
            const Point corner = spec.cell_corner({r, c});
            const double cx = std::clamp(p.x, corner.x, corner.x + spec.cell_size);
            const double cy = std::clamp(p.y, corner.y, corner.y + spec.cell_size);
            if (std::hypot(cx - p.x, cy - p.y) < radius) return false;
        }
    }
    return true;
}

// Positions are sampled at navigable cell centers so every distance in the
// pipeline shares the map quantization.
std::optional<Point> sample_navigable_center(const Scene& scene, Rng& rng,
                                             const std::function<bool(Point)>& accept) {
    for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
        const int r = static_cast<int>(rng.uniform_int(0, scene.spec.rows - 1));
        const int c = static_cast<int>(rng.uniform_int(0, scene.spec.cols - 1));
        if (!scene.navigable.at(r, c)) continue;
        const Point p = scene.spec.cell_center({r, c});
        if (accept(p)) return p;
    }
    return std::nullopt;
}

} // namespace

Episode generate_episode(const Scene& scene, const TaskConfig& task, Split split, uint64_t seed) {
    task.validate();
    Rng rng(mix_seeds(seed, 0xe915deULL));
    const double separation = min_object_separation(split);

    Episode ep;
    ep.scene_id = scene.id;
    ep.seed = seed;
    ep.split = split;
    ep.task = task;
    ep.id = scene.id + "_ep" + std::to_string(seed);

    // Start pose: navigable point with body clearance.
    auto start = sample_navigable_center(scene, rng, [&](Point p) {
        return disc_clear(scene, p, task.agent_radius);
    });
    if (!start) throw PlacementFailed("no clear start position");
    ep.start = {start->x, start->y, rng.uniform(0.0, 2.0 * M_PI)};

    // Goal sequence: n categories without replacement, the rest distractors.
    std::vector<int> categories(kObjectCount);
    std::iota(categories.begin(), categories.end(), 0);
    rng.shuffle(categories);

    std::vector<Point> placed;
    for (int i = 0; i < kObjectCount; ++i) {
        auto pos = sample_navigable_center(scene, rng, [&](Point p) {
            for (const Point& q : placed) {
                auto d = geodesic_distance(scene.navigable, scene.spec, p, q);
                if (!d || *d < separation) return false;
            }
            return true;
        });
        if (!pos) throw PlacementFailed("object separation unsatisfiable");
        placed.push_back(*pos);

        SceneObject obj;
        obj.id = i;
        obj.category = categories[i];
        obj.color = category_color(categories[i]);
        obj.position = *pos;
        ep.objects.push_back(obj);
        if (i < task.n_goals) {
            ep.goal_ids.push_back(i);
        } else {
            ep.distractor_ids.push_back(i);
        }
    }

    // Every goal must be reachable from the start.
    for (int gid : ep.goal_ids) {
        auto d = geodesic_distance(scene.navigable, scene.spec, ep.start.position(),
                                   ep.objects[gid].position);
        if (!d) throw PlacementFailed("goal unreachable from start");
    }

    if (task.mode == TaskMode::ObjectNav) {
        // Success viewpoints on a sparse ring 1 m from the object footprint.
        const SceneObject& goal = ep.objects[ep.goal_ids[0]];
        const double ring = goal.footprint_radius + 1.0;
        const int kRingSamples = 12;
        for (int k = 0; k < kRingSamples; ++k) {
            const double a = 2.0 * M_PI * k / kRingSamples;
            const Point vp{goal.position.x + ring * std::cos(a),
                           goal.position.y + ring * std::sin(a)};
            if (!scene.spec.contains(vp)) continue;
            if (scene.navigable.at(scene.spec.world_to_grid(vp))) {
                ep.viewpoints.push_back(vp);
            }
        }
    }
    return ep;
}

EpisodeCheck check_episode(const Scene& scene, const Episode& ep) {
    EpisodeCheck out;
    out.distractor_count_ok =
        static_cast<int>(ep.distractor_ids.size()) == kObjectCount - ep.task.n_goals &&
        static_cast<int>(ep.objects.size()) == kObjectCount;

    const double threshold = min_object_separation(ep.split);
    out.min_separation = kInf;
    out.separation_ok = true;
    for (size_t i = 0; i < ep.objects.size(); ++i) {
        for (size_t j = i + 1; j < ep.objects.size(); ++j) {
            auto d = geodesic_distance(scene.navigable, scene.spec,
                                       ep.objects[i].position, ep.objects[j].position);
            if (!d) {
                out.separation_ok = false;
                continue;
            }
            out.min_separation = std::min(out.min_separation, *d);
            if (*d < threshold) out.separation_ok = false;
        }
    }

    out.reachable_ok = true;
    for (int gid : ep.goal_ids) {
        auto d = geodesic_distance(scene.navigable, scene.spec, ep.start.position(),
                                   ep.objects[gid].position);
        if (!d) out.reachable_ok = false;
    }
    return out;
}

} // namespace monav
