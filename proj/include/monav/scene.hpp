#pragma once

#include <array>
#include <string>
#include <vector>

#include "monav/geometry.hpp"
#include "monav/rng.hpp"

namespace monav {

using Rgb = std::array<float, 3>; // channels in [0, 1]

// The fixed 8-category object vocabulary (cylinder objects identified by
// color). Category index == position in this list everywhere.
const std::vector<std::string>& object_categories();
Rgb category_color(int category);
int category_index(const std::string& name); // -1 if unknown

struct SceneObject {
    int id = -1;
    int category = -1;
    Rgb color{0, 0, 0};
    Point position;
    double footprint_radius = 0.15;
};

// Static 2D world. `objects` is populated per episode (scenes are shared
// between episodes, placements are not); it stays empty after generation.
struct Scene {
    std::string id;
    uint64_t seed = 0;
    GridSpec spec;
    MaskGrid obstacles;   // 1 = wall
    MaskGrid navigable;   // 1 = floor; complement of obstacles
    std::vector<SceneObject> objects;

    double area_m2() const;
    bool operator==(const Scene&) const = default;
};

struct SceneGenConfig {
    double width_m = 12.0;
    double height_m = 10.0;
    double cell_size = 0.2;
    int min_rooms = 3;
    int max_rooms = 6;
    double min_room_m = 2.0;
    double max_room_m = 4.5;
    double corridor_width_m = 0.8;
    int pillar_count = 4;        // small interior obstacles, re-checked for connectivity
    int max_attempts = 50;
};

// Rooms-and-corridors layout. The navigable region is a single connected
// component; deterministic per seed.
Scene generate_scene(const SceneGenConfig& cfg, uint64_t seed);

} // namespace monav
