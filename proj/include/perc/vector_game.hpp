#pragma once

#include "perc/engine.hpp"
#include "perc/tree_arena.hpp"

namespace perc {

enum class VectorMove {
    MakerTypeI,   // (-1, a')
    MakerTypeII,  // (b', -1)
    BreakerX,     // (-1, 0)
    BreakerY,     // (0, -1)
};

struct VectorGameState {
    long X = 0, Y = 0;
    int a_prime = 1, b_prime = 2;
    int p = 1, q = 1;

    bool breaker_won() const { return X == 0 && Y == 0; }
    long distance() const { return X + Y; }
    bool operator==(const VectorGameState&) const = default;
};

// Throws IllegalMove if the move belongs to the other player or leaves the quadrant.
VectorGameState vector_game_step(const VectorGameState& s, Player who, VectorMove m);

// Vector state of a bi-regular arena: a' = a-1, b' = b-1.
VectorGameState to_vector_state(const TreeArena& arena, int p, int q);

// The vector move matching a frontier claim in the arena.
VectorMove vector_move_of(const TreeArena& arena, Player who, EdgeId e);

}  // namespace perc
