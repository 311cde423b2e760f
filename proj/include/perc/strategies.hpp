#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>

#include "perc/annulus.hpp"
#include "perc/box_game.hpp"
#include "perc/colouring.hpp"
#include "perc/solver.hpp"
#include "perc/strategy.hpp"
#include "perc/strip_game.hpp"

namespace perc {

// Appends the lowest-index unclaimed edges not yet in `out` until it holds `quota` edges.
void fill_lowest(const GameState& s, std::vector<EdgeId>& out, int quota);

class FirstUnclaimed : public Strategy {
public:
    std::string name() const override { return "first-unclaimed"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;
};

// Follows a shortest root-boundary path where Safe edges are free. Maker takes the
// first unclaimed edge on it, Breaker the last.
class GreedyPath : public Strategy {
public:
    std::string name() const override { return "greedy"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;
};

// Uniform over unclaimed edges; the stream is seeded by (seed, t).
class RandomStrategy : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
    std::string name() const override { return "random(" + std::to_string(seed_) + ")"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;

private:
    std::uint64_t seed_;
};

// Plays a fixed edge list in order, skipping claimed edges, then the lowest unclaimed.
class ScriptedStrategy : public Strategy {
public:
    ScriptedStrategy(std::string name, std::vector<EdgeId> script)
        : name_(std::move(name)), script_(std::move(script)) {}
    std::string name() const override { return name_; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;

private:
    std::string name_;
    std::vector<EdgeId> script_;
};

// Edges of the ray from the root in direction (dx, dy), up to the window boundary.
std::vector<EdgeId> straight_line_script(const Board& window, int dx = 1, int dy = 0);
// Edges of the square spiral from the root, as far as it stays inside the window.
std::vector<EdgeId> spiral_script(const Board& window);

class SolverOptimal : public Strategy {
public:
    explicit SolverOptimal(SolveOptions opt = {}) : opt_(opt) {}
    std::string name() const override { return "solver-optimal"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;
    std::int64_t unsolved_turns() const { return unsolved_; }

private:
    SolveOptions opt_;
    std::int64_t unsolved_ = 0;
};

// Tree boards: claim frontier edges of the root's Safe component, Type II
// children first, lowest index on ties. Works for either role.
class TreeGreedy : public Strategy {
public:
    std::string name() const override { return "tree-greedy"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;
};

// Maker on an axis-coloured Z^d window. Each Breaker edge is repaired by a
// colouring_repair edge of a colour missing from Breaker's batch. Requires q < d.
class PathColouringMaker : public Strategy {
public:
    PathColouringMaker(const Board& window, const GameConfig& cfg);
    std::string name() const override { return "path-colouring"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;

    // Colouring of the current position with Safe edges contracted and Destroyed deleted.
    static ColouringState colouring_of(const GameState& s, std::span<const EdgeId> keep_live = {});
};

// Maker on a 2-D window with p >= 2q: claim the column above the root, then play
// H in the p-row strip above the root against Breaker's edges inside it.
class MakerColumn : public Strategy {
public:
    MakerColumn(const Board& window, const GameConfig& cfg);
    std::string name() const override { return "maker-column"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;

    const StripGraph& strip() const { return strip_; }
    // Board edge of strip edge j.
    EdgeId board_edge(int j) const { return to_board_[j]; }
    const std::vector<EdgeId>& column() const { return column_; }

private:
    std::vector<EdgeId> column_;
    StripGraph strip_;
    std::vector<EdgeId> to_board_;
    std::map<EdgeId, int> to_strip_;
    std::unique_ptr<HStrategy> h_;
    MinCutH greedy_;
};

struct AnnulusTurnLog {
    int p_L = 0;
    std::map<std::pair<int, int>, int> p_ik;  // (i, k) -> Maker edges in R_i(k)
    int box_responses = 0;
    std::map<std::pair<int, int>, int> strip_responses;
    int sp_filler = 0;
    int other_filler = 0;
};

// Breaker on a 2-D window with q >= 2p, centred at the root: the box game on the
// corner sets L(k) and H on each dual strip R*_i(k), spare edges inside S_p.
class BreakerAnnulus : public Strategy {
public:
    BreakerAnnulus(const Board& window, const GameConfig& cfg, int N);
    std::string name() const override { return "breaker-annulus(" + std::to_string(geo_.N()) + ")"; }
    std::vector<EdgeId> next_edges(const GameState& s, const TurnContext& ctx) override;

    const AnnulusGeometry& geometry() const { return geo_; }
    const BoundAnnulus& bound() const { return bound_; }
    std::optional<int> k0() const { return k0_; }
    const std::vector<AnnulusTurnLog>& log() const { return log_; }
    int box_phase() const { return box_.phase(); }

private:
    AnnulusGeometry geo_;
    BoundAnnulus bound_;
    int p_;
    BoxMakerStrategy box_;
    std::vector<std::unique_ptr<HStrategy>> h_;  // per k
    std::optional<int> k0_;
    std::vector<AnnulusTurnLog> log_;
};

}  // namespace perc
