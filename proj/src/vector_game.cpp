#include "perc/vector_game.hpp"

namespace perc {

VectorGameState vector_game_step(const VectorGameState& s, Player who, VectorMove m) {
    const bool maker_move = m == VectorMove::MakerTypeI || m == VectorMove::MakerTypeII;
    if (maker_move != (who == Player::Maker)) throw IllegalMove("vector move belongs to the other player");
    VectorGameState t = s;
    switch (m) {
        case VectorMove::MakerTypeI: t.X -= 1; t.Y += s.a_prime; break;
        case VectorMove::MakerTypeII: t.X += s.b_prime; t.Y -= 1; break;
        case VectorMove::BreakerX: t.X -= 1; break;
        case VectorMove::BreakerY: t.Y -= 1; break;
    }
    if (t.X < 0 || t.Y < 0) throw IllegalMove("vector move leaves the positive quadrant");
    return t;
}

VectorGameState to_vector_state(const TreeArena& arena, int p, int q) {
    VectorGameState s;
    s.X = arena.x_size();
    s.Y = arena.y_size();
    s.a_prime = arena.spec().a - 1;
    s.b_prime = arena.spec().b - 1;
    s.p = p;
    s.q = q;
    return s;
}

VectorMove vector_move_of(const TreeArena& arena, Player who, EdgeId e) {
    const bool to_type1 = arena.far_type(e) != VertexType::TypeII;
    if (who == Player::Maker) return to_type1 ? VectorMove::MakerTypeI : VectorMove::MakerTypeII;
    return to_type1 ? VectorMove::BreakerX : VectorMove::BreakerY;
}

}  // namespace perc
