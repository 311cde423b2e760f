#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "perc/engine.hpp"

namespace perc {

struct SolveOptions {
    std::int64_t max_nodes = 50'000'000;
    std::size_t max_memo_entries = 4'000'000;
    bool memo = true;
    // On tree boards only: restrict candidates to edges touching the root's Safe component.
    bool tree_pruning = true;
    int threads = 0;  // 0: OpenMP default
};

struct SolveResult {
    std::optional<Player> winner;      // empty: node cap hit, unsolved
    std::optional<EdgeId> best_move;   // present iff solved and non-terminal
    std::int64_t nodes = 0;
    int depth = 0;                     // deepest ply searched

    bool solved() const { return winner.has_value(); }
};

// Exact winner of the escape game from `s` with the player to move as given by t.
// best_move is the lowest-index winning move among edges on some simple
// root-boundary path (or the lowest such edge if the mover loses).
SolveResult solve_escape(const GameState& s, const SolveOptions& opt = {});
SolveResult solve_escape_serial(const GameState& s, const SolveOptions& opt = {});
SolveResult solve_escape(std::shared_ptr<const Board> board, const GameConfig& cfg, const SolveOptions& opt = {});

// Unclaimed edges that lie on some simple path from the root's Safe component to
// the boundary, ascending. These are the solver's root candidates.
std::vector<EdgeId> relevant_edges(const GameState& s);

}  // namespace perc
