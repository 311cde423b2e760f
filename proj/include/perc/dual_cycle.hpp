#pragma once

#include <vector>

#include "perc/board.hpp"
#include "perc/engine.hpp"

namespace perc {

struct DualCycle {
    bool found = false;
    std::vector<EdgeId> edges;  // primal edges whose duals form a simple cycle around the root
};

// Searches the duals of the destroyed edges of a 2-D window for a cycle with the
// root strictly inside. Union-find with parity of crossings of the ray leaving
// the root in the +x direction; ring edges on the window boundary are skipped.
DualCycle detect_dual_cycle(const Board& window, const std::vector<char>& destroyed);
DualCycle detect_dual_cycle(const Board& window, const std::vector<Claim>& claims);

// Root strictly inside the closed dual curve formed by `edges` (ray parity).
bool dual_cycle_surrounds_root(const Board& window, const std::vector<EdgeId>& edges);

// Same predicate as GameState::breaker_won, from a destroyed mask.
bool root_cut_off(const Board& b, const std::vector<char>& destroyed);

}  // namespace perc
