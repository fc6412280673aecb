#include "monav/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace monav {

std::string to_string(ExplorationStrategy s) {
    switch (s) {
        case ExplorationStrategy::Uniform: return "uniform";
        case ExplorationStrategy::UniformNoFailsafe: return "uniform_no_failsafe";
        case ExplorationStrategy::Stubborn: return "stubborn";
        default: return "frontier";
    }
}

ExplorationStrategy exploration_strategy_from_string(const std::string& s) {
    if (s == "uniform") return ExplorationStrategy::Uniform;
    if (s == "uniform_no_failsafe") return ExplorationStrategy::UniformNoFailsafe;
    if (s == "stubborn") return ExplorationStrategy::Stubborn;
    if (s == "frontier") return ExplorationStrategy::Frontier;
    throw ConfigError("unknown exploration strategy: " + s);
}

void ExplorationConfig::validate() const {
    if (alpha_exp < 1) throw ConfigError("alpha_exp must be >= 1");
    if (l_r <= 0 || l_s <= 0 || frontier_offset <= 0 || reach_tolerance <= 0) {
        throw ConfigError("exploration lengths must be positive");
    }
}

namespace {

Point propose_uniform(const AgentMaps& maps, const Pose& pose, double l_r, Rng& rng) {
    const GridSpec& spec = maps.spec();
    const double half = l_r / 2.0;
    const double x = std::clamp(pose.x + rng.uniform(-half, half),
                                spec.origin.x, spec.origin.x + spec.width());
    const double y = std::clamp(pose.y + rng.uniform(-half, half),
                                spec.origin.y, spec.origin.y + spec.height());
    return {x, y};
}

Point propose_stubborn(const Pose& pose, double l_s, int corner) {
    const double half = l_s / 2.0;
    static constexpr int kSigns[4][2] = {{+1, +1}, {+1, -1}, {-1, -1}, {-1, +1}};
    return {pose.x + kSigns[corner][0] * half, pose.y + kSigns[corner][1] * half};
}

bool is_frontier_cell(const Grid<uint8_t>& occ, int r, int c) {
    if (occ.at(r, c) != OccFree) return false;
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            if (occ.in_bounds(r + dr, c + dc) && occ.at(r + dr, c + dc) == OccUnknown) {
                return true;
            }
        }
    }
    return false;
}

// Nearest frontier cell by geodesic distance over explored free space.
std::optional<GridIndex> nearest_frontier(const AgentMaps& maps, const Pose& pose) {
    const Grid<uint8_t>& occ = maps.occupancy();
    const GridSpec& spec = maps.spec();
    GridIndex start;
    try {
        start = spec.world_to_grid(pose.position());
    } catch (const OutOfBounds&) {
        return std::nullopt;
    }

    // Dijkstra over free cells; the agent's own cell counts as free even if
    // not yet swept by a ray.
    Grid<double> dist(spec.rows, spec.cols, kInf);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist.at(start) = 0.0;
    heap.push({0.0, start.row * spec.cols + start.col});

    while (!heap.empty()) {
        auto [d, i] = heap.top();
        heap.pop();
        const int r = i / spec.cols;
        const int c = i % spec.cols;
        if (d > dist.at(r, c)) continue;
        if (is_frontier_cell(occ, r, c)) return GridIndex{r, c};
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const int nr = r + dr;
                const int nc = c + dc;
                if (!occ.in_bounds(nr, nc) || occ.at(nr, nc) != OccFree) continue;
                const double nd = d + ((dr && dc) ? kSqrt2 : 1.0);
                if (nd < dist.at(nr, nc)) {
                    dist.at(nr, nc) = nd;
                    heap.push({nd, nr * spec.cols + nc});
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ExplorationProposal> propose(const ExplorationConfig& cfg, const AgentMaps& maps,
                                           const Pose& pose, ExplorationState& state, Rng& rng) {
    ExplorationProposal prop;
    switch (cfg.strategy) {
        case ExplorationStrategy::Uniform:
        case ExplorationStrategy::UniformNoFailsafe:
            prop.goal = propose_uniform(maps, pose, cfg.l_r, rng);
            break;
        case ExplorationStrategy::Stubborn:
            prop.goal = propose_stubborn(pose, cfg.l_s, state.corner);
            state.corner = (state.corner + 1) % 4;
            break;
        case ExplorationStrategy::Frontier: {
            auto cell = nearest_frontier(maps, pose);
            if (!cell) return std::nullopt;
            const Point fp = maps.spec().cell_center(*cell);
            Point dir = fp - pose.position();
            const double len = norm(dir);
            if (len < 1e-9) {
                dir = pose.forward();
            } else {
                dir = (1.0 / len) * dir;
            }
            prop.goal = fp + cfg.frontier_offset * dir;
            prop.frontier_cell = *cell;
            break;
        }
    }
    state.goal = prop.goal;
    state.steps_toward_goal = 0;
    return prop;
}

bool tick(ExplorationState& state, bool reached, const ExplorationConfig& cfg) {
    ++state.steps_toward_goal;
    if (reached) return true;
    return cfg.failsafe_active() && state.steps_toward_goal >= cfg.alpha_exp;
}

} // namespace monav
