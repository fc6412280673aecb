#include "monav/scene.hpp"

#include <algorithm>
#include <cmath>

namespace monav {

const std::vector<std::string>& object_categories() {
    static const std::vector<std::string> kCategories = {
        "red", "green", "blue", "yellow", "cyan", "magenta", "white", "black"};
    return kCategories;
}

Rgb category_color(int category) {
    static const std::array<Rgb, 8> kColors = {{
        {1.0f, 0.0f, 0.0f}, // red
        {0.0f, 1.0f, 0.0f}, // green
        {0.0f, 0.0f, 1.0f}, // blue
        {1.0f, 1.0f, 0.0f}, // yellow
        {0.0f, 1.0f, 1.0f}, // cyan
        {1.0f, 0.0f, 1.0f}, // magenta
        {1.0f, 1.0f, 1.0f}, // white
        {0.0f, 0.0f, 0.0f}, // black
    }};
    return kColors.at(static_cast<size_t>(category));
}

int category_index(const std::string& name) {
    const auto& cats = object_categories();
    for (size_t i = 0; i < cats.size(); ++i) {
        if (cats[i] == name) return static_cast<int>(i);
    }
    return -1;
}

double Scene::area_m2() const {
    size_t n = 0;
    for (uint8_t v : navigable.data()) n += v;
    return static_cast<double>(n) * spec.cell_size * spec.cell_size;
}

namespace {

struct Room {
    int r0, c0, r1, c1; // inclusive cell range
    GridIndex center() const { return {(r0 + r1) / 2, (c0 + c1) / 2}; }
};

void carve_rect(MaskGrid& floor, int r0, int c0, int r1, int c1) {
    r0 = std::max(r0, 1);
    c0 = std::max(c0, 1);
    r1 = std::min(r1, floor.rows() - 2);
    c1 = std::min(c1, floor.cols() - 2);
    for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) floor.at(r, c) = 1;
    }
}

// L-shaped corridor between two cells, horizontal leg first.
void carve_corridor(MaskGrid& floor, GridIndex a, GridIndex b, int width) {
    const int half = width / 2;
    const int cl = std::min(a.col, b.col);
    const int ch = std::max(a.col, b.col);
    carve_rect(floor, a.row - half, cl - half, a.row + half, ch + half);
    const int rl = std::min(a.row, b.row);
    const int rh = std::max(a.row, b.row);
    carve_rect(floor, rl - half, b.col - half, rh + half, b.col + half);
}

bool try_generate(const SceneGenConfig& cfg, Rng& rng, MaskGrid& floor) {
    const int rows = floor.rows();
    const int cols = floor.cols();
    floor.fill(0);

    const int n_rooms = static_cast<int>(rng.uniform_int(cfg.min_rooms, cfg.max_rooms));
    std::vector<Room> rooms;
    for (int i = 0; i < n_rooms; ++i) {
        const int h = static_cast<int>(std::lround(
            rng.uniform(cfg.min_room_m, cfg.max_room_m) / cfg.cell_size));
        const int w = static_cast<int>(std::lround(
            rng.uniform(cfg.min_room_m, cfg.max_room_m) / cfg.cell_size));
        if (h + 2 >= rows || w + 2 >= cols) continue;
        const int r0 = static_cast<int>(rng.uniform_int(1, rows - h - 2));
        const int c0 = static_cast<int>(rng.uniform_int(1, cols - w - 2));
        rooms.push_back({r0, c0, r0 + h - 1, c0 + w - 1});
        carve_rect(floor, r0, c0, r0 + h - 1, c0 + w - 1);
    }
    if (rooms.size() < 2) return false;

    const int corridor_cells = std::max(1, static_cast<int>(
        std::lround(cfg.corridor_width_m / cfg.cell_size)));
    for (size_t i = 1; i < rooms.size(); ++i) {
        carve_corridor(floor, rooms[i - 1].center(), rooms[i].center(), corridor_cells);
    }

    // Interior pillars; drop any that break connectivity.
    for (int p = 0; p < cfg.pillar_count; ++p) {
        const int r = static_cast<int>(rng.uniform_int(2, rows - 3));
        const int c = static_cast<int>(rng.uniform_int(2, cols - 3));
        const int size = static_cast<int>(rng.uniform_int(1, 2));
        std::vector<GridIndex> removed;
        for (int dr = 0; dr < size; ++dr) {
            for (int dc = 0; dc < size; ++dc) {
                if (floor.at(r + dr, c + dc)) {
                    floor.at(r + dr, c + dc) = 0;
                    removed.push_back({r + dr, c + dc});
                }
            }
        }
        auto [comp, n] = connected_components(floor);
        (void)comp;
        if (n != 1) {
            for (GridIndex g : removed) floor.at(g) = 1;
        }
    }

    auto [comp, n] = connected_components(floor);
    (void)comp;
    return n == 1;
}

} // namespace

Scene generate_scene(const SceneGenConfig& cfg, uint64_t seed) {
    if (cfg.width_m < 5.0 || cfg.height_m < 5.0) {
        throw ConfigError("scene dimensions must be >= 5 m");
    }
    const int rows = static_cast<int>(std::lround(cfg.height_m / cfg.cell_size));
    const int cols = static_cast<int>(std::lround(cfg.width_m / cfg.cell_size));

    Rng rng(mix_seeds(seed, 0x5ce9eULL));
    MaskGrid floor(rows, cols, 0);
    bool ok = false;
    for (int attempt = 0; attempt < cfg.max_attempts && !ok; ++attempt) {
        ok = try_generate(cfg, rng, floor);
    }
    if (!ok) throw GenerationFailed("scene generation failed after bounded retries");

    Scene scene;
    scene.seed = seed;
    scene.id = "scene_" + std::to_string(seed);
    scene.spec = GridSpec{cfg.cell_size, rows, cols, {0.0, 0.0}};
    scene.navigable = floor;
    scene.obstacles = MaskGrid(rows, cols, 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            scene.obstacles.at(r, c) = floor.at(r, c) ? 0 : 1;
        }
    }
    return scene;
}

} // namespace monav
