#include "perc/tree_theory.hpp"

#include <stdexcept>

namespace perc {

TreeDecision decide_tree(const TreeSpec& spec, int p, int q) {
    spec.validate();
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be >= 1");
    TreeDecision out;
    if (spec.is_regular()) {
        const long gain = static_cast<long>(p) * (spec.d - 2);
        if (gain >= q) {
            out.winner = Player::Maker;
        } else {
            out.winner = Player::Breaker;
            out.round_bound = ceil_div(spec.d, q - gain);
        }
        return out;
    }
    BiRegularParams bp{spec.a, spec.b, p, q};
    out.winner = bp.delta() >= 0 ? Player::Maker : Player::Breaker;
    if (spec.a == spec.b && out.winner == Player::Breaker)
        out.round_bound = ceil_div(spec.a, q - static_cast<long>(p) * (spec.a - 2));
    return out;
}

long phase_length_bound(int a, long d0, int p) {
    const long denom = static_cast<long>(p) * (static_cast<long>(a) * a - a - 1);
    if (denom <= 0) throw std::invalid_argument("phase bound needs a >= 2");
    return ceil_div(static_cast<long>(a) * d0, denom);
}

long phase_length_bound_exact(int a, long d0, int p) {
    const long denom = static_cast<long>(p) * (static_cast<long>(a) * a - a - 1);
    if (denom <= 0) throw std::invalid_argument("phase bound needs a >= 2");
    return ceil_div(static_cast<long>(a) * (a + 1) * d0, denom);
}

double breaker_turn_bound(long d, int p, int a) { return 1000.0 * static_cast<double>(d) * d / (static_cast<double>(p) * a); }

}  // namespace perc
