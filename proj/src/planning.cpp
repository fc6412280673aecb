#include "monav/planning.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace monav {

std::vector<std::vector<GridIndex>> label_clusters(const AgentMaps& maps, int category) {
    const std::vector<GridIndex> cells = maps.query_goal_cells(category);
    const Grid<int8_t>& labels = maps.labels();

    Grid<uint8_t> seen(labels.rows(), labels.cols(), 0);
    std::vector<std::vector<GridIndex>> clusters;
    for (const GridIndex& seed : cells) {
        if (seen.at(seed)) continue;
        std::vector<GridIndex> cluster;
        std::vector<GridIndex> stack{seed};
        seen.at(seed) = 1;
        while (!stack.empty()) {
            GridIndex g = stack.back();
            stack.pop_back();
            cluster.push_back(g);
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int nr = g.row + dr;
                    const int nc = g.col + dc;
                    if (labels.in_bounds(nr, nc) && !seen.at(nr, nc) &&
                        labels.at(nr, nc) == category) {
                        seen.at(nr, nc) = 1;
                        stack.push_back({nr, nc});
                    }
                }
            }
        }
        // deterministic member order
        std::sort(cluster.begin(), cluster.end(), [](GridIndex a, GridIndex b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

GridIndex snap_centroid(const std::vector<GridIndex>& cluster) {
    double mr = 0.0, mc = 0.0;
    for (const GridIndex& g : cluster) {
        mr += g.row;
        mc += g.col;
    }
    mr /= static_cast<double>(cluster.size());
    mc /= static_cast<double>(cluster.size());

    // Nearest member to the (possibly unlabeled) centroid; ties break in
    // row-major order, which the sorted member list provides.
    GridIndex best = cluster.front();
    double best_d = kInf;
    for (const GridIndex& g : cluster) {
        const double d = std::hypot(g.row - mr, g.col - mc);
        if (d < best_d - 1e-12) {
            best = g;
            best_d = d;
        }
    }
    return best;
}

namespace {

// Geodesic distance from the agent cell to the nearest member of each
// cluster, over explored free space. One Dijkstra sweep shared by all
// clusters; unreachable clusters fall back to Euclidean.
std::vector<double> cluster_distances(const AgentMaps& maps, const Pose& pose,
                                      const std::vector<std::vector<GridIndex>>& clusters) {
    const GridSpec& spec = maps.spec();
    const Grid<uint8_t>& occ = maps.occupancy();

    Grid<double> dist(spec.rows, spec.cols, kInf);
    GridIndex start{-1, -1};
    try {
        start = spec.world_to_grid(pose.position());
    } catch (const OutOfBounds&) {
    }
    if (dist.in_bounds(start)) {
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
    }

    std::vector<double> out;
    const Point agent = pose.position();
    for (const auto& cluster : clusters) {
        double geo = kInf;
        for (const GridIndex& g : cluster) geo = std::min(geo, dist.at(g));
        if (geo == kInf) {
            double eu = kInf;
            for (const GridIndex& g : cluster) {
                eu = std::min(eu, distance(agent, spec.cell_center(g)) / spec.cell_size);
            }
            geo = eu;
        }
        out.push_back(geo);
    }
    return out;
}

} // namespace

PlanTarget select_target(const AgentMaps& maps, int current_goal,
                         const std::optional<Point>& exploration_goal, const Pose& pose) {
    if (maps.has_label(current_goal)) {
        auto clusters = label_clusters(maps, current_goal);
        const auto dists = cluster_distances(maps, pose, clusters);
        size_t pick = 0;
        for (size_t i = 1; i < clusters.size(); ++i) {
            if (dists[i] < dists[pick]) pick = i;
        }
        PlanTarget target;
        target.kind = PlanTarget::Kind::TaskGoal;
        target.cluster = clusters[pick];
        target.point = maps.spec().cell_center(snap_centroid(target.cluster));
        return target;
    }
    PlanTarget target;
    target.kind = PlanTarget::Kind::Exploration;
    target.point = exploration_goal.value(); // pre: present when label absent
    return target;
}

} // namespace monav
