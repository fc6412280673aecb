#pragma once

#include <optional>
#include <string>

#include "monav/mapping.hpp"

namespace monav {

enum class ExplorationStrategy { Uniform, UniformNoFailsafe, Stubborn, Frontier };

std::string to_string(ExplorationStrategy s);
ExplorationStrategy exploration_strategy_from_string(const std::string& s);

struct ExplorationConfig {
    ExplorationStrategy strategy = ExplorationStrategy::Uniform;
    int alpha_exp = 50;           // fail-safe step threshold
    double l_r = 10.0;            // uniform sampling window, meters
    double l_s = 3.0;             // stubborn local grid, meters
    double frontier_offset = 2.0; // goal distance beyond the frontier cell
    double reach_tolerance = 0.4; // "reached" = within two grid cells

    bool failsafe_active() const {
        return strategy != ExplorationStrategy::UniformNoFailsafe;
    }
    void validate() const;
};

struct ExplorationState {
    std::optional<Point> goal;  // map frame
    int steps_toward_goal = 0;
    int corner = 0;             // stubborn corner index, cycles 0..3
};

struct ExplorationProposal {
    Point goal;
    // frontier strategy only: the explored/unexplored boundary cell the
    // goal was pushed out from
    std::optional<GridIndex> frontier_cell;
};

// Proposes the next exploration goal; call only while the current task goal
// is absent from the semantic map. Frontier returns nullopt when the map has
// no frontier left (caller falls back to uniform).
std::optional<ExplorationProposal> propose(const ExplorationConfig& cfg, const AgentMaps& maps,
                                           const Pose& pose, ExplorationState& state, Rng& rng);

// Step accounting for an active exploration goal. Returns true when the
// goal should be resampled: on arrival, or past alpha_exp steps when the
// fail-safe is active.
bool tick(ExplorationState& state, bool reached, const ExplorationConfig& cfg);

} // namespace monav
