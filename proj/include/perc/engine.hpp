#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "perc/board.hpp"

namespace perc {

enum class Player : std::uint8_t { Maker, Breaker };
enum class Claim : std::uint8_t { Unclaimed, Safe, Destroyed };

inline Player opponent(Player p) { return p == Player::Maker ? Player::Breaker : Player::Maker; }
const char* player_name(Player p);
char player_letter(Player p);

struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GameConfig {
    int p = 1;
    int q = 1;
    Player first = Player::Maker;

    int quota(Player who) const { return who == Player::Maker ? p : q; }
    int period() const { return p + q; }
    void validate() const;
    bool operator==(const GameConfig&) const = default;
};

struct Move {
    int time = 0;  // t after the move
    Player player = Player::Maker;
    EdgeId edge = 0;
};

class GameState {
public:
    GameState(std::shared_ptr<const Board> board, GameConfig cfg);
    // Maker head start: these edges are Safe before t = 0 and do not advance t.
    GameState(std::shared_ptr<const Board> board, GameConfig cfg, std::span<const EdgeId> head_start);

    const Board& board() const { return *board_; }
    const std::shared_ptr<const Board>& board_ptr() const { return board_; }
    const GameConfig& config() const { return cfg_; }

    Claim claim(EdgeId e) const { return claims_.at(e); }
    const std::vector<Claim>& claims() const { return claims_; }
    int time() const { return static_cast<int>(history_.size()); }
    const std::vector<Move>& history() const { return history_; }
    const std::vector<EdgeId>& head_start() const { return head_; }

    Player to_move() const { return mover_at(time()); }
    int remaining_in_turn() const;
    int turns_started() const;  // 1-based index of the current turn of to_move()
    int round() const { return time() / cfg_.period(); }
    Player mover_at(int t) const;

    void apply(Player who, EdgeId e);

    int num_unclaimed() const { return unclaimed_; }
    std::vector<EdgeId> unclaimed() const;
    // Edges of `who`'s most recent turn, completed or in progress.
    std::vector<EdgeId> last_batch(Player who) const;

    bool maker_won() const;
    bool breaker_won() const;
    bool exhausted() const { return unclaimed_ == 0; }
    bool decided() const { return maker_won() || breaker_won(); }

private:
    std::shared_ptr<const Board> board_;
    GameConfig cfg_;
    std::vector<Claim> claims_;
    std::vector<Move> history_;
    std::vector<EdgeId> head_;
    int unclaimed_ = 0;
};

// Board after contracting Safe edges and deleting Destroyed ones. Classes are
// named by their smallest vertex; live edges keep their board ids.
class ReducedGraph {
public:
    explicit ReducedGraph(const GameState& s);

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<VertexId>& classes() const { return classes_; }
    VertexId class_of(VertexId v) const { return rep_.at(v); }
    VertexId root_class() const { return root_; }
    const std::vector<VertexId>& boundary_classes() const { return boundary_; }
    const std::vector<EdgeId>& live_edges() const { return live_; }
    // Endpoint classes of a live edge.
    std::pair<VertexId, VertexId> ends(EdgeId e) const;

    // Relabel classes 0..k-1 in order of representative; boundary classes become the
    // boundary. Throws BoardError unless the reduction is connected and undecided.
    Board as_board() const;

    bool operator==(const ReducedGraph& o) const;

private:
    std::shared_ptr<const Board> board_;
    std::vector<VertexId> rep_;
    std::vector<VertexId> classes_;
    std::vector<VertexId> boundary_;
    std::vector<EdgeId> live_;
    VertexId root_ = 0;
};

inline ReducedGraph reduce(const GameState& s) { return ReducedGraph(s); }

}  // namespace perc
